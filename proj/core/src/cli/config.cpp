#include "ara/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ara/errors.hpp"

#ifndef ARA_DEFAULT_CONFIG
#define ARA_DEFAULT_CONFIG "default_model.json"
#endif

namespace ara::cli {

namespace {

using nlohmann::json;
using stoch::DistKind;
using stoch::DistSpec;

// Walks one JSON object, remembering which keys were read so leftovers can be
// reported as unknown.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  std::string field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  [[noreturn]] static void fail(const std::string& field, const std::string& what) {
    throw ConfigurationError("config field '" + field + "': " + what);
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& at(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) fail(field(key), "missing");
    return *it;
  }

  double number(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number()) fail(field(key), "expected a number");
    return v.get<double>();
  }

  std::int64_t integer(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number_integer()) fail(field(key), "expected an integer");
    return v.get<std::int64_t>();
  }

  std::string text(const std::string& key) {
    const json& v = at(key);
    if (!v.is_string()) fail(field(key), "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = at(key);
    if (!v.is_array()) fail(field(key), "expected an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) fail(field(key), "expected an array of numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }

  Section child(const std::string& key) { return Section(at(key), field(key)); }

  void finish() const {
    for (const auto& [key, _] : j_.items()) {
      if (!seen_.count(key)) fail(field(key), "unknown field");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

DistKind kind_from_string(const std::string& name, const std::string& field) {
  for (DistKind k : {DistKind::gamma, DistKind::beta, DistKind::binomial, DistKind::uniform,
                     DistKind::triangular, DistKind::normal, DistKind::capped_poisson,
                     DistKind::point_mass}) {
    if (name == stoch::to_string(k)) return k;
  }
  Section::fail(field, "unknown distribution kind '" + name + "'");
}

stoch::Uniform read_uniform(Section s) {
  stoch::Uniform u{s.number("lo"), s.number("hi")};
  s.finish();
  return u;
}
stoch::Beta read_beta(Section s) {
  stoch::Beta b{s.number("a"), s.number("b")};
  s.finish();
  return b;
}
stoch::Normal read_normal(Section s) {
  stoch::Normal n{s.number("mean"), s.number("sd")};
  s.finish();
  return n;
}
stoch::Triangular read_triangular(Section s) {
  stoch::Triangular t{s.number("min"), s.number("mode"), s.number("max")};
  s.finish();
  return t;
}

DistSpec read_dist(Section s) {
  const DistKind kind = kind_from_string(s.text("kind"), s.field("kind"));
  DistSpec out;
  switch (kind) {
    case DistKind::gamma: out = stoch::Gamma{s.number("shape"), s.number("rate")}; break;
    case DistKind::beta: out = stoch::Beta{s.number("a"), s.number("b")}; break;
    case DistKind::binomial: out = stoch::Binomial{s.integer("n"), s.number("p")}; break;
    case DistKind::uniform: out = stoch::Uniform{s.number("lo"), s.number("hi")}; break;
    case DistKind::triangular:
      out = stoch::Triangular{s.number("min"), s.number("mode"), s.number("max")};
      break;
    case DistKind::normal: out = stoch::Normal{s.number("mean"), s.number("sd")}; break;
    case DistKind::capped_poisson: out = stoch::CappedPoisson{s.number("lambda")}; break;
    case DistKind::point_mass: out = stoch::PointMass{s.number("x")}; break;
  }
  s.finish();
  return out;
}

stoch::HyperSpec read_hyper(Section s) {
  stoch::HyperSpec h;
  h.family = kind_from_string(s.text("family"), s.field("family"));
  const json& params = s.at("parameters");
  Section ps(params, s.field("parameters"));
  for (const auto& [name, _] : params.items()) {
    h.parameters[name] = read_dist(ps.child(name));
  }
  s.finish();
  try {
    stoch::validate(h);
  } catch (const ConfigurationError& e) {
    Section::fail(s.field("parameters"), e.what());
  }
  return h;
}

casestudy::PremiumRow read_premium(Section s) {
  casestudy::PremiumRow r{s.number("none_eur"), s.number("anti_fire_eur"),
                          s.number("firewall_or_ddos_eur"), s.number("procedures_eur")};
  s.finish();
  return r;
}

casestudy::DefenderParams read_defender(Section s) {
  casestudy::DefenderParams d{};
  d.facility_value_eur = s.number("facility_value_eur");
  d.computer_value_eur = s.number("computer_value_eur");
  d.market_share_value_eur = s.number("market_share_value_eur");
  d.anti_fire_cost_eur = s.number("anti_fire_cost_eur");
  d.firewall_cost_eur = s.number("firewall_cost_eur");
  d.procedures_cost_eur = s.number("procedures_cost_eur");

  {
    Section tiers = s.child("ddos_tiers");
    const char* names[] = {"2_gbps", "5_gbps", "10_gbps", "1_tbps"};
    for (std::size_t i = 0; i < 4; ++i) {
      Section t = tiers.child(names[i]);
      d.ddos_tiers[i] = {t.number("capacity_gbps"), t.number("cost_eur")};
      t.finish();
    }
    tiers.finish();
  }

  d.traditional_premium = read_premium(s.child("traditional_premium"));
  d.cyber_premium = read_premium(s.child("cyber_premium"));
  d.comprehensive_discount_eur = s.number("comprehensive_discount_eur");
  d.premium_scale = s.number("premium_scale");
  d.coverage_fraction = s.number("coverage_fraction");

  d.fire_rate_per_year = s.number("fire_rate_per_year");
  {
    Section g = s.child("fire_duration_minutes");
    d.fire_duration_minutes = {g.number("shape"), g.number("rate_per_minute")};
    g.finish();
  }
  d.fire_duration_anti_fire_minutes = read_triangular(s.child("fire_duration_anti_fire_minutes"));
  d.full_damage_fire_minutes = s.number("full_damage_fire_minutes");

  d.virus_exposures_per_year = s.integer("virus_exposures_computer_months_per_year");
  {
    Section v = s.child("virus_infection_prob_per_computer_month");
    d.virus_infection_rates = {v.number("firewall_and_procedures"), v.number("firewall_only"),
                               v.number("procedures_only"), v.number("neither")};
    v.finish();
  }
  d.virus_repair_cost_eur = s.number("virus_repair_cost_eur");
  d.virus_lost_time_cost_eur = s.number("virus_lost_time_cost_eur");
  d.virus_lost_time_fraction_max = s.number("virus_lost_time_fraction_max");

  {
    Section g = s.child("ddos_attack_length_hours");
    d.ddos_attack_length_hours = {g.number("shape"), g.number("rate_per_hour")};
    g.finish();
  }
  {
    Section g = s.child("ddos_attack_peak_gbps");
    d.ddos_attack_peak_gbps = {g.number("shape"), g.number("rate_per_gbps")};
    g.finish();
  }
  d.market_loss_rate_lo_share_per_hour = s.number("market_loss_rate_lo_share_per_hour");
  d.market_loss_rate_hi_share_per_hour = s.number("market_loss_rate_hi_share_per_hour");
  d.eur_per_share_point = s.number("eur_per_share_point");

  d.utility_max_cost_eur = s.number("utility_max_cost_eur");
  d.baseline_cost_eur = s.number("baseline_cost_eur");
  s.finish();
  return d;
}

casestudy::AttackerParams read_attacker(Section s) {
  casestudy::AttackerParams a{};
  const std::int64_t max_attacks = s.integer("max_attacks");
  if (max_attacks < 0 || max_attacks > 10'000) {
    Section::fail(s.field("max_attacks"), "must lie in [0, 10000]");
  }
  a.max_attacks = static_cast<int>(max_attacks);
  a.attack_cost_eur = s.number("attack_cost_eur");
  a.attack_length_hours = read_hyper(s.child("attack_length_hours"));
  a.attack_peak_gbps = read_hyper(s.child("attack_peak_gbps"));
  a.loss_rate_lo_prior = read_uniform(s.child("loss_rate_lo_prior_share_per_hour"));
  a.loss_rate_hi_prior = read_uniform(s.child("loss_rate_hi_prior_share_per_hour"));
  a.detection_prob_prior = read_beta(s.child("detection_prob_prior"));
  a.risk_exponent_prior = read_uniform(s.child("risk_exponent_prior"));
  a.detection_cost_eur = read_normal(s.child("detection_cost_eur"));
  a.eur_per_share_point = s.number("eur_per_share_point");
  a.market_loss_cap_eur = s.number("market_loss_cap_eur");
  a.utility_floor_eur = s.number("utility_floor_eur");
  a.utility_ceiling_eur = s.number("utility_ceiling_eur");
  s.finish();
  return a;
}

json write_dist(const DistSpec& spec) {
  json j;
  j["kind"] = stoch::to_string(stoch::kind_of(spec));
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, stoch::Gamma>) {
          j["shape"] = d.shape;
          j["rate"] = d.rate;
        } else if constexpr (std::is_same_v<T, stoch::Beta>) {
          j["a"] = d.a;
          j["b"] = d.b;
        } else if constexpr (std::is_same_v<T, stoch::Binomial>) {
          j["n"] = d.n;
          j["p"] = d.p;
        } else if constexpr (std::is_same_v<T, stoch::Uniform>) {
          j["lo"] = d.lo;
          j["hi"] = d.hi;
        } else if constexpr (std::is_same_v<T, stoch::Triangular>) {
          j["min"] = d.min;
          j["mode"] = d.mode;
          j["max"] = d.max;
        } else if constexpr (std::is_same_v<T, stoch::Normal>) {
          j["mean"] = d.mean;
          j["sd"] = d.sd;
        } else if constexpr (std::is_same_v<T, stoch::CappedPoisson>) {
          j["lambda"] = d.lambda;
        } else {
          j["x"] = d.x;
        }
      },
      spec);
  return j;
}

json write_hyper(const stoch::HyperSpec& h) {
  json params = json::object();
  for (const auto& [name, spec] : h.parameters) params[name] = write_dist(spec);
  return {{"family", stoch::to_string(h.family)}, {"parameters", params}};
}

json write_premium(const casestudy::PremiumRow& r) {
  return {{"none_eur", r.none_eur},
          {"anti_fire_eur", r.anti_fire_eur},
          {"firewall_or_ddos_eur", r.firewall_or_ddos_eur},
          {"procedures_eur", r.procedures_eur}};
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

ModelConfig default_config() {
  ModelConfig c;
  c.model = casestudy::default_case_study();
  return c;
}

ModelConfig parse_config(const std::string& text, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const std::size_t line = line_of(text, byte);
    const std::size_t line_start = text.rfind('\n', byte == 0 ? 0 : byte - 1);
    const std::size_t column = line_start == std::string::npos ? byte + 1 : byte - line_start;
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": parse error: " << e.what();
    throw ConfigurationError(msg.str());
  }

  ModelConfig c;
  Section top(root, "");
  if (top.has("solver")) {
    Section s = top.child("solver");
    if (s.has("k_draws")) c.budgets.k_draws = s.integer("k_draws");
    if (s.has("m_inner")) c.budgets.m_inner = s.integer("m_inner");
    if (s.has("n_samples")) c.budgets.n_samples = s.integer("n_samples");
    if (s.has("seed")) {
      const json& v = s.at("seed");
      if (!v.is_number_unsigned()) Section::fail("solver.seed", "expected a non-negative integer");
      c.seed = v.get<std::uint64_t>();
    }
    s.finish();
    if (c.budgets.k_draws < 1) Section::fail("solver.k_draws", "must be >= 1");
    if (c.budgets.m_inner < 1) Section::fail("solver.m_inner", "must be >= 1");
    if (c.budgets.n_samples < 1) Section::fail("solver.n_samples", "must be >= 1");
  }
  if (top.has("analysis")) {
    Section a = top.child("analysis");
    if (a.has("sensitivity_parameters")) {
      const json& v = a.at("sensitivity_parameters");
      if (!v.is_array()) Section::fail("analysis.sensitivity_parameters", "expected an array");
      for (const auto& x : v) {
        if (!x.is_string()) Section::fail("analysis.sensitivity_parameters", "expected strings");
        c.grids.sensitivity_parameters.push_back(x.get<std::string>());
      }
    }
    if (a.has("sensitivity_multipliers")) {
      c.grids.sensitivity_multipliers = a.numbers("sensitivity_multipliers");
    }
    if (a.has("rosi_budgets_eur")) c.grids.rosi_budgets_eur = a.numbers("rosi_budgets_eur");
    a.finish();
  }

  if (top.has("constraints")) {
    Section k = top.child("constraints");
    if (k.has("budget_limit_eur")) c.constraints.budget_limit_eur = k.number("budget_limit_eur");
    if (k.has("required_controls")) {
      const json& v = k.at("required_controls");
      if (!v.is_array()) Section::fail("constraints.required_controls", "expected an array");
      for (const auto& x : v) {
        const std::string name = x.is_string() ? x.get<std::string>() : "";
        if (name != "anti_fire" && name != "firewall" && name != "procedures" && name != "ddos") {
          Section::fail("constraints.required_controls",
                        "entries must be anti_fire, firewall, procedures or ddos");
        }
        c.constraints.required_controls.push_back(name);
      }
    }
    if (k.has("insurance_required")) {
      const json& v = k.at("insurance_required");
      if (!v.is_boolean()) Section::fail("constraints.insurance_required", "expected a boolean");
      c.constraints.insurance_required = v.get<bool>();
    }
    k.finish();
    if (c.constraints.budget_limit_eur && !(*c.constraints.budget_limit_eur >= 0)) {
      throw ParameterDomainError("constraints.budget_limit_eur", "must be >= 0");
    }
  }

  c.model.defender = read_defender(top.child("defender"));
  c.model.attacker = read_attacker(top.child("attacker"));
  top.finish();

  try {
    c.model.defender.validate();
  } catch (const ParameterDomainError& e) {
    throw ParameterDomainError("defender." + e.field(), e.what());
  }
  try {
    c.model.attacker.validate();
  } catch (const ParameterDomainError& e) {
    throw ParameterDomainError("attacker." + e.field(), e.what());
  }
  return c;
}

ModelConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

std::string serialize_config(const ModelConfig& c) {
  const auto& d = c.model.defender;
  const auto& a = c.model.attacker;

  json tiers = json::object();
  const char* names[] = {"2_gbps", "5_gbps", "10_gbps", "1_tbps"};
  for (std::size_t i = 0; i < 4; ++i) {
    tiers[names[i]] = {{"capacity_gbps", d.ddos_tiers[i].capacity_gbps},
                       {"cost_eur", d.ddos_tiers[i].cost_eur}};
  }

  json defender = {
      {"facility_value_eur", d.facility_value_eur},
      {"computer_value_eur", d.computer_value_eur},
      {"market_share_value_eur", d.market_share_value_eur},
      {"anti_fire_cost_eur", d.anti_fire_cost_eur},
      {"firewall_cost_eur", d.firewall_cost_eur},
      {"procedures_cost_eur", d.procedures_cost_eur},
      {"ddos_tiers", tiers},
      {"traditional_premium", write_premium(d.traditional_premium)},
      {"cyber_premium", write_premium(d.cyber_premium)},
      {"comprehensive_discount_eur", d.comprehensive_discount_eur},
      {"premium_scale", d.premium_scale},
      {"coverage_fraction", d.coverage_fraction},
      {"fire_rate_per_year", d.fire_rate_per_year},
      {"fire_duration_minutes",
       {{"shape", d.fire_duration_minutes.shape},
        {"rate_per_minute", d.fire_duration_minutes.rate}}},
      {"fire_duration_anti_fire_minutes",
       {{"min", d.fire_duration_anti_fire_minutes.min},
        {"mode", d.fire_duration_anti_fire_minutes.mode},
        {"max", d.fire_duration_anti_fire_minutes.max}}},
      {"full_damage_fire_minutes", d.full_damage_fire_minutes},
      {"virus_exposures_computer_months_per_year", d.virus_exposures_per_year},
      {"virus_infection_prob_per_computer_month",
       {{"firewall_and_procedures", d.virus_infection_rates.firewall_and_procedures},
        {"firewall_only", d.virus_infection_rates.firewall_only},
        {"procedures_only", d.virus_infection_rates.procedures_only},
        {"neither", d.virus_infection_rates.neither}}},
      {"virus_repair_cost_eur", d.virus_repair_cost_eur},
      {"virus_lost_time_cost_eur", d.virus_lost_time_cost_eur},
      {"virus_lost_time_fraction_max", d.virus_lost_time_fraction_max},
      {"ddos_attack_length_hours",
       {{"shape", d.ddos_attack_length_hours.shape},
        {"rate_per_hour", d.ddos_attack_length_hours.rate}}},
      {"ddos_attack_peak_gbps",
       {{"shape", d.ddos_attack_peak_gbps.shape},
        {"rate_per_gbps", d.ddos_attack_peak_gbps.rate}}},
      {"market_loss_rate_lo_share_per_hour", d.market_loss_rate_lo_share_per_hour},
      {"market_loss_rate_hi_share_per_hour", d.market_loss_rate_hi_share_per_hour},
      {"eur_per_share_point", d.eur_per_share_point},
      {"utility_max_cost_eur", d.utility_max_cost_eur},
      {"baseline_cost_eur", d.baseline_cost_eur},
  };

  json attacker = {
      {"max_attacks", a.max_attacks},
      {"attack_cost_eur", a.attack_cost_eur},
      {"attack_length_hours", write_hyper(a.attack_length_hours)},
      {"attack_peak_gbps", write_hyper(a.attack_peak_gbps)},
      {"loss_rate_lo_prior_share_per_hour",
       {{"lo", a.loss_rate_lo_prior.lo}, {"hi", a.loss_rate_lo_prior.hi}}},
      {"loss_rate_hi_prior_share_per_hour",
       {{"lo", a.loss_rate_hi_prior.lo}, {"hi", a.loss_rate_hi_prior.hi}}},
      {"detection_prob_prior",
       {{"a", a.detection_prob_prior.a}, {"b", a.detection_prob_prior.b}}},
      {"risk_exponent_prior",
       {{"lo", a.risk_exponent_prior.lo}, {"hi", a.risk_exponent_prior.hi}}},
      {"detection_cost_eur",
       {{"mean", a.detection_cost_eur.mean}, {"sd", a.detection_cost_eur.sd}}},
      {"eur_per_share_point", a.eur_per_share_point},
      {"market_loss_cap_eur", a.market_loss_cap_eur},
      {"utility_floor_eur", a.utility_floor_eur},
      {"utility_ceiling_eur", a.utility_ceiling_eur},
  };

  json analysis = {{"sensitivity_parameters", c.grids.sensitivity_parameters},
                   {"sensitivity_multipliers", c.grids.sensitivity_multipliers},
                   {"rosi_budgets_eur", c.grids.rosi_budgets_eur}};

  json constraints = {{"required_controls", c.constraints.required_controls},
                      {"insurance_required", c.constraints.insurance_required}};
  if (c.constraints.budget_limit_eur) {
    constraints["budget_limit_eur"] = *c.constraints.budget_limit_eur;
  }

  json root = {
      {"constraints", constraints},
      {"solver",
       {{"k_draws", c.budgets.k_draws},
        {"m_inner", c.budgets.m_inner},
        {"n_samples", c.budgets.n_samples},
        {"seed", c.seed}}},
      {"analysis", analysis},
      {"defender", defender},
      {"attacker", attacker},
  };
  return root.dump(2) + "\n";
}

std::filesystem::path bundled_config_path() { return ARA_DEFAULT_CONFIG; }

}  // namespace ara::cli
