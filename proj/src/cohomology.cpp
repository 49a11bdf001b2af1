#include "ssf/cohomology.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>

#include "ssf/errors.hpp"

namespace ssf {

Cocycle2::Cocycle2(FiniteGroup group, BitVector values)
    : group_(std::move(group)), values_(std::move(values)) {
  const auto n = group_.order();
  if (values_.size() != n * n) {
    throw ValidationError("cocycle has " + std::to_string(values_.size()) + " bits, expected " +
                          std::to_string(n * n));
  }
  const auto& f = *this;
  for (Elem g = 0; g < n; ++g) {
    if (f(kIdentity, g) || f(g, kIdentity)) {
      throw ValidationError("cocycle is not normalized at element " + std::to_string(g));
    }
  }
  for (Elem g = 1; g < n; ++g) {
    for (Elem h = 1; h < n; ++h) {
      const Elem gh = group_.mul(g, h);
      for (Elem k = 1; k < n; ++k) {
        if (f(g, h) ^ f(gh, k) ^ f(h, k) ^ f(g, group_.mul(h, k))) {
          throw ValidationError("cocycle identity fails at (" + std::to_string(g) + "," +
                                std::to_string(h) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

Cocycle2 Cocycle2::zero(const FiniteGroup& group) {
  return Cocycle2(group, BitVector(group.order() * group.order()));
}

BitVector coboundary_of(const FiniteGroup& g, const BitVector& u) {
  const auto n = g.order();
  if (u.size() != n) throw PreconditionError("coboundary needs one bit per element");
  if (u.get(kIdentity)) throw PreconditionError("coboundary needs u(e) = 0");
  BitVector out(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      out.set(a * n + b, u.get(a) ^ u.get(b) ^ u.get(g.mul(a, b)));
  return out;
}

Gf2Subspace coboundary_space(const FiniteGroup& g) {
  const auto n = g.order();
  Gf2Subspace space(n * n);
  for (Elem a = 1; a < n; ++a) {
    BitVector u(n);
    u.set(a);
    space.insert(coboundary_of(g, u));
  }
  return space;
}

std::size_t H2Data::class_of(const Cocycle2& f) const {
  if (!f.group().same_table(group)) throw PreconditionError("cocycle lives on another group");
  const auto reduced = classes.front().coboundaries->reduce(f.bits());
  for (const auto& c : classes)
    if (c.representative.bits() == reduced) return c.index;
  throw std::logic_error("cocycle outside every class");
}

H2Data cocycle_space(const FiniteGroup& g, std::size_t bound) {
  const auto n = g.order();
  if (n > bound) {
    throw BoundError("H^2 computation limited to order " + std::to_string(bound) + ", got " +
                     std::to_string(n));
  }
  const auto col = [n](Elem a, Elem b) { return static_cast<std::uint32_t>(a * n + b); };

  // Each equation touches at most four unknowns; repeated unknowns cancel.
  using Equation = std::array<std::uint32_t, 4>;
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  std::vector<Equation> equations;
  for (Elem a = 0; a < n; ++a) {
    equations.push_back({col(kIdentity, a), kNone, kNone, kNone});
    equations.push_back({col(a, kIdentity), kNone, kNone, kNone});
  }
  for (Elem a = 1; a < n; ++a) {
    for (Elem b = 1; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem c = 1; c < n; ++c) {
        std::array<std::uint32_t, 4> t{col(a, b), col(ab, c), col(b, c), col(a, g.mul(b, c))};
        std::sort(t.begin(), t.end());
        Equation eq{kNone, kNone, kNone, kNone};
        std::size_t len = 0;
        for (std::size_t i = 0; i < 4;) {
          if (i + 1 < 4 && t[i] == t[i + 1]) {
            i += 2;
          } else {
            eq[len++] = t[i++];
          }
        }
        if (len > 0) equations.push_back(eq);
      }
    }
  }
  std::sort(equations.begin(), equations.end());
  equations.erase(std::unique(equations.begin(), equations.end()), equations.end());

  GF2Matrix system(equations.size(), n * n);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (auto c : equations[r])
      if (c != kNone) system.flip(r, c);

  H2Data out{g, {}, {}, {}};
  for (auto& v : system.kernel_basis()) out.cocycle_basis.emplace_back(g, std::move(v));

  auto boundaries = std::make_shared<Gf2Subspace>(coboundary_space(g));
  for (const auto& b : boundaries->basis()) out.coboundary_basis.emplace_back(g, b);

  // Complement of the coboundaries inside the cocycles, reduced so that every
  // combination is already the least element of its coset.
  Gf2Subspace running = *boundaries;
  std::vector<BitVector> complement;
  for (const auto& z : out.cocycle_basis) {
    auto r = running.reduce(z.bits());
    if (r.is_zero()) continue;
    running.insert(r);
    complement.push_back(std::move(r));
  }
  if (running.dim() != out.cocycle_dim()) {
    throw std::logic_error("coboundaries are not contained in the cocycle space");
  }

  const auto h = complement.size();
  std::vector<BitVector> reps;
  reps.reserve(std::size_t{1} << h);
  for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
    BitVector v(n * n);
    for (std::size_t i = 0; i < h; ++i)
      if (mask >> i & 1u) v ^= complement[i];
    reps.push_back(boundaries->reduce(std::move(v)));
  }
  std::sort(reps.begin(), reps.end(),
            [](const BitVector& a, const BitVector& b) { return a.lex_less(b); });
  for (std::size_t i = 0; i < reps.size(); ++i) {
    out.classes.push_back(CohomologyClass{i, Cocycle2(g, std::move(reps[i])), boundaries});
  }
  return out;
}

void write_cocycle(std::ostream& out, const Cocycle2& f) {
  const auto n = f.group().order();
  out << n << '\n';
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) out << (f(a, b) ? '1' : '0');
    out << '\n';
  }
}

Cocycle2 read_cocycle(std::istream& in, const FiniteGroup& g) {
  std::size_t n = 0;
  if (!(in >> n)) throw ParseError("cocycle file: missing order");
  if (n != g.order()) {
    throw ParseError("cocycle file is for order " + std::to_string(n) + ", group has order " +
                     std::to_string(g.order()));
  }
  BitVector bits(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string row;
    if (!(in >> row) || row.size() != n ||
        row.find_first_not_of("01") != std::string::npos) {
      throw ParseError("cocycle file: row " + std::to_string(a) + " must be " +
                       std::to_string(n) + " characters of 0/1");
    }
    for (std::size_t b = 0; b < n; ++b) bits.set(a * n + b, row[b] == '1');
  }
  return Cocycle2(g, std::move(bits));
}

}  // namespace ssf
