#include "groupbell/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "groupbell/errors.hpp"
#include "groupbell/version.hpp"

namespace groupbell {

using nlohmann::json;

namespace {

const json& require_field(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(ptr + "/" + key, "missing required field");
  return *it;
}

long long require_integer(const json& value, const std::string& ptr, long long minimum) {
  if (!value.is_number_integer())
    throw SchemaError(ptr, "expected an integer");
  const long long v = value.get<long long>();
  if (v < minimum)
    throw SchemaError(ptr, "value must be >= " + std::to_string(minimum));
  return v;
}

std::string require_string(const json& value, const std::string& ptr) {
  if (!value.is_string()) throw SchemaError(ptr, "expected a string");
  return value.get<std::string>();
}

Complex parse_complex(const json& value, const std::string& ptr) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
    throw SchemaError(ptr, "expected a [re, im] pair");
  return {value[0].get<double>(), value[1].get<double>()};
}

Vector parse_vector(const json& value, const std::string& ptr) {
  if (!value.is_array() || value.empty()) throw SchemaError(ptr, "expected a nonempty array");
  Vector v(value.size());
  for (std::size_t i = 0; i < value.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = parse_complex(value[i], ptr + "/" + std::to_string(i));
  return v;
}

Matrix parse_matrix(const json& value, const std::string& ptr) {
  if (!value.is_array() || value.empty()) throw SchemaError(ptr, "expected a nonempty array of rows");
  const std::size_t rows = value.size();
  std::size_t cols = 0;
  Matrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_ptr = ptr + "/" + std::to_string(i);
    if (!value[i].is_array() || value[i].empty())
      throw SchemaError(row_ptr, "expected a nonempty array");
    if (i == 0) {
      cols = value[i].size();
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (value[i].size() != cols) {
      throw SchemaError(row_ptr, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_complex(value[i][j], row_ptr + "/" + std::to_string(j));
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json event_to_json(const Event& event) {
  json parts = json::array();
  for (const PartyEvent& pe : event.parties) parts.push_back({pe.observable, pe.outcome});
  return parts;
}

json seed_to_json(const OrbitSeed& seed, const FiniteGroup& group) {
  json words = json::array();
  for (int g : seed.elements) words.push_back(group.name(g));
  return words;
}

std::string family_name(GroupFamily family) {
  return family == GroupFamily::cyclic ? "cyclic" : "dihedral";
}

std::string policy_name(QuestionPolicy policy) {
  return policy == QuestionPolicy::restricted ? "restricted" : "full";
}

}  // namespace

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

QuantumMethod parse_method(const std::string& name) {
  if (name == "dense") return QuantumMethod::dense;
  if (name == "gram") return QuantumMethod::gram;
  if (name == "symmetry") return QuantumMethod::symmetry;
  if (name == "all") return QuantumMethod::all;
  throw Error("unknown method '" + name + "' (expected dense, gram, symmetry or all)");
}

ScenarioInput scenario_input_from_json(const json& root) {
  ScenarioInput input;
  if (!root.is_object()) throw SchemaError("", "expected a JSON object");

  const json& group_spec = require_field(root, "group", "");
  const std::string family = require_string(require_field(group_spec, "family", "/group"),
                                            "/group/family");
  const long long n = require_integer(require_field(group_spec, "n", "/group"), "/group/n", 1);
  if (family == "cyclic") {
    input.group = make_cyclic(static_cast<int>(n));
  } else if (family == "dihedral") {
    if (n < 2) throw SchemaError("/group/n", "dihedral groups need n >= 2");
    input.group = make_dihedral(static_cast<int>(n));
  } else {
    throw SchemaError("/group/family", "expected 'cyclic' or 'dihedral'");
  }

  const json& rep_spec = require_field(root, "representation", "");
  const bool has_builtin = rep_spec.is_object() && rep_spec.contains("builtin");
  const bool has_generators = rep_spec.is_object() && rep_spec.contains("generators");
  if (has_builtin == has_generators)
    throw SchemaError("/representation", "exactly one of 'builtin' or 'generators' required");
  if (has_builtin) {
    const std::string rep_name =
        require_string(rep_spec.at("builtin"), "/representation/builtin");
    try {
      input.rep = builtin_representation(rep_name);
    } catch (const Error& e) {
      throw SchemaError("/representation/builtin", e.what());
    }
    if (!input.rep.group.same_group_as(input.group))
      throw SchemaError("/representation/builtin",
                        "built-in representation '" + rep_name + "' belongs to a different group");
  } else {
    const json& generators = rep_spec.at("generators");
    if (!generators.is_object())
      throw SchemaError("/representation/generators", "expected an object of matrices");
    std::map<std::string, Matrix> parsed;
    for (const auto& [key, value] : generators.items())
      parsed[key] = parse_matrix(value, "/representation/generators/" + key);
    for (const auto& [key, matrix] : parsed)
      if (!is_unitary(matrix))
        throw SchemaError("/representation/generators/" + key,
                          "matrix '" + key + "' is not unitary within 1e-9");
    try {
      input.rep = rep_from_generators(input.group, parsed);
    } catch (const Error& e) {
      throw SchemaError("/representation/generators", e.what());
    }
  }

  input.init = parse_vector(require_field(root, "initial_state", ""), "/initial_state");
  if (input.init.size() != input.rep.dim)
    throw SchemaError("/initial_state", "dimension does not match the representation");
  if (std::abs(input.init.norm() - 1.0) > tol::structural)
    throw SchemaError("/initial_state", "state is not normalized within 1e-9");

  input.parties =
      static_cast<int>(require_integer(require_field(root, "parties", ""), "/parties", 1));

  const json& seeds = require_field(root, "seeds", "");
  if (!seeds.is_array() || seeds.empty())
    throw SchemaError("/seeds", "expected a nonempty array of seeds");
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const std::string seed_ptr = "/seeds/" + std::to_string(i);
    if (!seeds[i].is_array() || static_cast<int>(seeds[i].size()) != input.parties)
      throw SchemaError(seed_ptr, "expected one group element per party");
    OrbitSeed seed;
    for (std::size_t j = 0; j < seeds[i].size(); ++j) {
      const std::string word =
          require_string(seeds[i][j], seed_ptr + "/" + std::to_string(j));
      try {
        seed.elements.push_back(input.group.parse_element(word));
      } catch (const Error& e) {
        throw SchemaError(seed_ptr + "/" + std::to_string(j), e.what());
      }
    }
    input.seeds.push_back(std::move(seed));
  }

  if (root.contains("game")) {
    input.game = require_string(root.at("game"), "/game");
    if (input.game != "restricted" && input.game != "full" && input.game != "none")
      throw SchemaError("/game", "expected 'restricted', 'full' or 'none'");
  }

  // canonical echo of the parsed values
  input.echo = json{{"group", {{"family", family_name(input.group.family)},
                               {"n", input.group.family_n}}},
                    {"initial_state", vector_to_json(input.init)},
                    {"parties", input.parties},
                    {"game", input.game}};
  if (has_builtin) {
    input.echo["representation"] = {{"builtin", rep_spec.at("builtin").get<std::string>()}};
  } else {
    json generators = json::object();
    if (input.group.family == GroupFamily::dihedral) {
      generators["r"] = matrix_to_json(input.rep.matrix(1));
      generators["s"] = matrix_to_json(input.rep.matrix(input.group.family_n));
    } else {
      generators["r"] =
          matrix_to_json(input.rep.matrix(input.group.order > 1 ? 1 : 0));
    }
    input.echo["representation"] = {{"generators", std::move(generators)}};
  }
  json seed_words = json::array();
  for (const OrbitSeed& seed : input.seeds) seed_words.push_back(seed_to_json(seed, input.group));
  input.echo["seeds"] = std::move(seed_words);
  return input;
}

ScenarioInput scenario_input_from_registry(const RegistryEntry& entry) {
  json spec;
  const Representation rep = builtin_representation(entry.rep_name);
  spec["group"] = {{"family", family_name(rep.group.family)}, {"n", rep.group.family_n}};
  spec["representation"] = {{"builtin", entry.rep_name}};
  spec["initial_state"] = vector_to_json(builtin_initial_state(entry.rep_name));
  spec["parties"] = entry.parties;
  spec["seeds"] = entry.seed_words;
  spec["game"] = policy_name(entry.game_policy);
  return scenario_input_from_json(spec);
}

json scenario_to_json(const BellScenario& scenario) {
  json events = json::array();
  for (const auto& [event, coefficient] : scenario.coefficients)
    events.push_back({{"parties", event_to_json(event)}, {"coefficient", coefficient}});

  std::map<Event, int> event_index;
  int index = 0;
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)coefficient;
    event_index[event] = index++;
  }

  json orbits = json::array();
  for (const auto& orbit : scenario.orbits) {
    json orbit_events = json::array();
    for (const Event& event : orbit.events) orbit_events.push_back(event_index.at(event));
    orbits.push_back({{"seed", seed_to_json(orbit.seed, scenario.local.rep.group)},
                      {"events", std::move(orbit_events)}});
  }

  return json{{"parties", scenario.parties},
              {"observables", scenario.observable_count()},
              {"outcomes", scenario.outcome_count()},
              {"group_order", scenario.group_order()},
              {"events", std::move(events)},
              {"orbits", std::move(orbits)}};
}

json certificate_to_json(const BellCertificate& cert, const BellScenario& scenario) {
  json probabilities = json::array();
  for (const auto& [event, probability] : cert.optimal_probabilities) {
    (void)event;
    probabilities.push_back(probability);
  }
  json witness = json::array();
  for (const auto& per_party : cert.classical_witness.outcome) witness.push_back(per_party);

  json methods = json::object();
  for (const auto& [name, value] : cert.method_values) methods[name] = value;

  (void)scenario;
  return json{{"classical_bound", cert.classical_bound},
              {"classical_witness", std::move(witness)},
              {"quantum_value", cert.quantum_value},
              {"optimal_state", vector_to_json(cert.optimal_state)},
              {"optimal_probabilities", std::move(probabilities)},
              {"method_values", std::move(methods)},
              {"method_agreement", cert.method_agreement},
              {"top_eigenspace_dim", cert.top_eigenspace_dim},
              {"violation", cert.violation}};
}

json game_to_json(const NonlocalGame& game, const GameValue& classical, double quantum) {
  json questions = json::array();
  for (const auto& question : game.questions) questions.push_back(question);
  json winning = json::array();
  for (std::size_t q = 0; q < game.winning.size(); ++q) {
    json cells = json::array();
    for (const auto& answers : game.winning[q]) cells.push_back(answers);
    winning.push_back({{"question_index", q}, {"answers", std::move(cells)}});
  }
  json strategy = json::array();
  for (const auto& per_party : classical.witness.answer) strategy.push_back(per_party);

  return json{{"policy", policy_name(game.policy)},
              {"questions", std::move(questions)},
              {"winning", std::move(winning)},
              {"classical_value",
               {{"num", classical.win_count},
                {"den", classical.question_count},
                {"value", classical.value()}}},
              {"quantum_value", quantum},
              {"witness_strategy", std::move(strategy)}};
}

json hit_to_json(const SearchHit& hit, const FiniteGroup& group) {
  json seeds = json::array();
  for (const OrbitSeed& seed : hit.seeds) seeds.push_back(seed_to_json(seed, group));
  return json{{"seeds", std::move(seeds)},
              {"classical_bound", hit.classical_bound},
              {"quantum_value", hit.quantum_value},
              {"margin", hit.margin}};
}

json run_analyze(const ScenarioInput& input, QuantumMethod method,
                 const std::optional<std::string>& game_override) {
  const LocalEventSet local = classify_local_events(input.rep, input.init);
  const BellScenario scenario = build_scenario(local, input.parties, input.seeds);
  const BellCertificate cert = quantum_maximum(scenario, method);

  json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kVersion}};
  doc["input"] = input.echo;
  doc["scenario"] = scenario_to_json(scenario);
  doc["certificate"] = certificate_to_json(cert, scenario);

  const std::string game_mode = game_override.value_or(input.game);
  if (game_mode != "none") {
    const QuestionPolicy policy =
        game_mode == "restricted" ? QuestionPolicy::restricted : QuestionPolicy::full;
    const NonlocalGame game = game_from_scenario(scenario, policy);
    const GameValue classical = classical_game_value(game);
    const double quantum = quantum_game_value(game, scenario, cert.optimal_state);
    doc["game"] = game_to_json(game, classical, quantum);
  }
  return doc;
}

ReproduceOutcome run_reproduce(const std::string& name) {
  const RegistryEntry entry = registry_entry(name);
  const ScenarioInput input = scenario_input_from_registry(entry);

  ReproduceOutcome outcome;
  outcome.document = run_analyze(input, QuantumMethod::all, std::nullopt);

  json checks = json::array();
  auto add_check = [&](const std::string& check_name, const json& expected, const json& actual,
                       bool ok) {
    checks.push_back(
        {{"name", check_name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
    if (!ok) {
      std::ostringstream message;
      message << check_name << ": expected " << expected << ", got " << actual;
      outcome.mismatches.push_back(message.str());
      outcome.golden_ok = false;
    }
  };

  const json& cert = outcome.document.at("certificate");
  const long long actual_bound = cert.at("classical_bound").get<long long>();
  add_check("classical_bound", entry.classical_bound, actual_bound,
            actual_bound == entry.classical_bound);
  const double actual_quantum = cert.at("quantum_value").get<double>();
  add_check("quantum_value", entry.quantum_value, actual_quantum,
            std::abs(actual_quantum - entry.quantum_value) <= 1e-9);

  if (entry.game_classical && outcome.document.contains("game")) {
    const json& game = outcome.document.at("game");
    const long long num = game.at("classical_value").at("num").get<long long>();
    const long long den = game.at("classical_value").at("den").get<long long>();
    const bool equal = num * entry.game_classical->den == den * entry.game_classical->num;
    add_check("game_classical_value",
              json{{"num", entry.game_classical->num}, {"den", entry.game_classical->den}},
              json{{"num", num}, {"den", den}}, equal);
    const double game_quantum = game.at("quantum_value").get<double>();
    add_check("game_quantum_value", *entry.game_quantum, game_quantum,
              std::abs(game_quantum - *entry.game_quantum) <= 1e-9);
  }

  json golden;
  golden["checks"] = std::move(checks);
  golden["all_match"] = outcome.golden_ok;
  golden["closed_forms"] = {{"quantum_value", entry.quantum_closed_form}};
  if (!entry.game_quantum_closed_form.empty())
    golden["closed_forms"]["game_quantum_value"] = entry.game_quantum_closed_form;
  outcome.document["golden"] = std::move(golden);
  return outcome;
}

std::string render_table(const json& document, const std::optional<RegistryEntry>& entry) {
  std::ostringstream out;
  out.precision(12);
  const json& input = document.at("input");
  const json& scenario = document.at("scenario");
  const json& cert = document.at("certificate");

  const int parties = scenario.at("parties").get<int>();
  out << "group: " << input.at("group").at("family").get<std::string>() << " n="
      << input.at("group").at("n").get<long long>()
      << "  (order " << scenario.at("group_order").get<long long>() << ")\n";
  out << "scenario: " << parties << " parties, M=" << scenario.at("observables").get<int>()
      << " observables, K=" << scenario.at("outcomes").get<int>() << " outcomes, "
      << scenario.at("events").size() << " events\n";

  auto event_label = [&](const json& event_parties) {
    std::ostringstream label;
    label << "p(";
    for (std::size_t k = 0; k < event_parties.size(); ++k) {
      const int observable = event_parties[k][0].get<int>();
      int outcome = event_parties[k][1].get<int>();
      if (entry && observable < static_cast<int>(entry->outcome_relabel.size()))
        outcome = entry->outcome_relabel[observable][outcome];
      if (k) label << ", ";
      label << static_cast<char>('a' + k) << observable << "=" << outcome;
    }
    label << ")";
    return label.str();
  };

  const json& events = scenario.at("events");
  for (const json& orbit : scenario.at("orbits")) {
    out << "orbit seed (";
    const json& seed = orbit.at("seed");
    for (std::size_t i = 0; i < seed.size(); ++i)
      out << (i ? ", " : "") << seed[i].get<std::string>();
    out << "):\n";
    const json& indices = orbit.at("events");
    for (std::size_t g = 0; g < indices.size(); ++g) {
      const json& event = events[indices[g].get<std::size_t>()];
      out << "  " << event_label(event.at("parties"));
      if (event.at("coefficient").get<int>() > 1)
        out << "  (x" << event.at("coefficient").get<int>() << ")";
      out << "\n";
    }
  }

  out << "classical bound S_c = " << cert.at("classical_bound").get<long long>() << "\n";
  out << "quantum maximum S_q = " << cert.at("quantum_value").get<double>();
  if (entry && !entry->quantum_closed_form.empty()) out << "  [" << entry->quantum_closed_form << "]";
  out << "\n";
  out << "violation: " << (cert.at("violation").get<bool>() ? "yes" : "no") << "\n";
  out << "method agreement: " << cert.at("method_agreement").get<double>() << " across";
  for (const auto& [method, value] : cert.at("method_values").items()) {
    (void)value;
    out << " " << method;
  }
  out << "\n";

  if (document.contains("game")) {
    const json& game = document.at("game");
    out << "game (" << game.at("policy").get<std::string>()
        << "): classical " << game.at("classical_value").at("num").get<long long>() << "/"
        << game.at("classical_value").at("den").get<long long>() << ", quantum "
        << game.at("quantum_value").get<double>();
    if (entry && !entry->game_quantum_closed_form.empty())
      out << "  [" << entry->game_quantum_closed_form << "]";
    out << "\n";
  }
  if (document.contains("golden")) {
    const json& golden = document.at("golden");
    out << "golden: " << (golden.at("all_match").get<bool>() ? "all values match" : "MISMATCH")
        << "\n";
    for (const json& check : golden.at("checks"))
      if (!check.at("ok").get<bool>())
        out << "  mismatch " << check.at("name").get<std::string>() << ": expected "
            << check.at("expected") << ", got " << check.at("actual") << "\n";
  }
  return out.str();
}

}  // namespace groupbell
