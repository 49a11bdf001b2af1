#include "ssf/report.hpp"

#include <sstream>

#include "json.hpp"
#include "ssf/errors.hpp"

namespace ssf {

using json = nlohmann::ordered_json;

Report make_report(const SpaceFormInstance& inst, const std::string& group_name,
                   const Verdict& verdict) {
  Report r;
  r.n = inst.n;
  r.group = group_name;
  r.order = inst.group.order();
  r.verdict = to_string(verdict.outcome);
  if (verdict.theorem) r.theorem = to_string(*verdict.theorem);
  if (!verdict.witnesses.empty()) {
    std::vector<std::string> labels;
    for (const auto& w : verdict.witnesses) labels.push_back(w.label);
    r.witness = std::move(labels);
  }
  if (verdict.characteristic) {
    const auto& c = *verdict.characteristic;
    r.orientable = c.orientable;
    r.spin = c.spin;
    r.pin_plus = c.pin_plus;
    r.pin_minus = c.pin_minus;
  }
  // Below dimension 5 the existence criterion does not apply; report it as undetermined.
  Psc psc = Psc::NeedsAlpha;
  if (verdict.psc) psc = *verdict.psc;
  else if (inst.n >= 5) psc = psc_exists(inst);
  r.psc = to_string(psc);
  r.classes_considered = verdict.classes_considered;
  r.trace = verdict.trace;
  return r;
}

namespace {

template <class T>
json nullable(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_get(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

std::string to_json(const Report& r) {
  json trace = json::array();
  for (const auto& s : r.trace) {
    trace.push_back(json{{"step", s.step}, {"cite", s.cite}, {"result", s.result}});
  }
  json j{
      {"n", r.n},
      {"group", r.group},
      {"order", r.order},
      {"verdict", r.verdict},
      {"theorem", nullable(r.theorem)},
      {"witness", nullable(r.witness)},
      {"orientable", r.orientable},
      {"spin", r.spin},
      {"pin_plus", nullable(r.pin_plus)},
      {"pin_minus", nullable(r.pin_minus)},
      {"psc", r.psc},
      {"classes_considered", r.classes_considered},
      {"trace", std::move(trace)},
  };
  return j.dump();
}

Report report_from_json(const std::string& text) {
  try {
    const auto j = json::parse(text);
    Report r;
    r.n = j.at("n").get<int>();
    r.group = j.at("group").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    r.verdict = j.at("verdict").get<std::string>();
    r.theorem = opt_get<std::string>(j, "theorem");
    r.witness = opt_get<std::vector<std::string>>(j, "witness");
    r.orientable = j.at("orientable").get<bool>();
    r.spin = j.at("spin").get<bool>();
    r.pin_plus = opt_get<bool>(j, "pin_plus");
    r.pin_minus = opt_get<bool>(j, "pin_minus");
    r.psc = j.at("psc").get<std::string>();
    if (r.psc != "yes" && r.psc != "no" && r.psc != "needs_alpha") {
      throw ParseError("report: bad psc value '" + r.psc + "'");
    }
    r.classes_considered = j.at("classes_considered").get<std::size_t>();
    for (const auto& s : j.at("trace")) {
      r.trace.push_back({s.at("step").get<std::string>(), s.at("cite").get<std::string>(),
                         s.at("result").get<std::string>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "n = " << r.n << ", G = " << r.group << " (order " << r.order << ")\n";
  os << "verdict: " << r.verdict;
  if (r.theorem) os << " via " << *r.theorem;
  os << '\n';
  auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; };
  os << "orientable: " << (r.orientable ? "yes" : "no") << ", spin: " << (r.spin ? "yes" : "no")
     << ", pin+: " << tri(r.pin_plus) << ", pin-: " << tri(r.pin_minus) << '\n';
  os << "psc metric: " << r.psc << '\n';
  if (r.classes_considered) os << "extension classes considered: " << r.classes_considered << '\n';
  if (r.witness) {
    os << "witnesses:";
    for (const auto& w : *r.witness) os << ' ' << w;
    os << '\n';
  }
  os << "trace:\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& s = r.trace[i];
    os << "  " << i + 1 << ". " << s.step << ": " << s.result << "\n     [" << s.cite << "]\n";
  }
  return os.str();
}

}  // namespace ssf
