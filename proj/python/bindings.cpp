#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "groupbell/bounds.hpp"
#include "groupbell/errors.hpp"
#include "groupbell/games.hpp"
#include "groupbell/io.hpp"
#include "groupbell/registry.hpp"
#include "groupbell/search.hpp"
#include "groupbell/version.hpp"

namespace py = pybind11;
using namespace groupbell;

namespace {

QuantumMethod method_from_string(const std::string& name) { return parse_method(name); }

QuestionPolicy policy_from_string(const std::string& name) {
  if (name == "restricted") return QuestionPolicy::restricted;
  if (name == "full") return QuestionPolicy::full;
  throw Error("unknown policy '" + name + "' (expected restricted or full)");
}

py::tuple event_to_tuple(const Event& event) {
  py::tuple out(event.parties.size());
  for (std::size_t k = 0; k < event.parties.size(); ++k)
    out[k] = py::make_tuple(event.parties[k].observable, event.parties[k].outcome);
  return out;
}

OrbitSeed seed_from_object(const FiniteGroup& group, const py::handle& obj) {
  OrbitSeed seed;
  for (const py::handle item : obj) {
    if (py::isinstance<py::str>(item))
      seed.elements.push_back(group.parse_element(item.cast<std::string>()));
    else
      seed.elements.push_back(item.cast<int>());
  }
  return seed;
}

std::vector<OrbitSeed> seeds_from_object(const FiniteGroup& group, const py::handle& obj) {
  std::vector<OrbitSeed> seeds;
  for (const py::handle item : obj) seeds.push_back(seed_from_object(group, item));
  return seeds;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bell inequalities from finite-group orbits";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "GroupbellError", PyExc_RuntimeError);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_readonly("order", &FiniteGroup::order)
      .def_property_readonly(
          "family",
          [](const FiniteGroup& g) {
            return g.family == GroupFamily::cyclic ? "cyclic" : "dihedral";
          })
      .def_readonly("n", &FiniteGroup::family_n)
      .def("name", &FiniteGroup::name, py::arg("element"))
      .def("parse_element", &FiniteGroup::parse_element, py::arg("word"))
      .def("multiply", &FiniteGroup::multiply, py::arg("g"), py::arg("h"))
      .def("inverse", &FiniteGroup::inverse, py::arg("g"))
      .def("element_order", &FiniteGroup::element_order, py::arg("g"))
      .def("__len__", [](const FiniteGroup& g) { return g.order; })
      .def("__repr__", [](const FiniteGroup& g) {
        return (g.family == GroupFamily::cyclic ? "Z" : "D") + std::to_string(g.family_n);
      });

  m.def("make_cyclic", &make_cyclic, py::arg("n"));
  m.def("make_dihedral", &make_dihedral, py::arg("n"));
  m.def(
      "conjugacy_classes",
      [](const FiniteGroup& group) { return conjugacy_classes(group).classes; },
      py::arg("group"));

  py::class_<Representation>(m, "Representation")
      .def_readonly("group", &Representation::group)
      .def_readonly("dim", &Representation::dim)
      .def("matrix", &Representation::matrix, py::arg("element"))
      .def("character", &Representation::character, py::arg("element"));

  m.def(
      "rep_from_generators",
      [](const FiniteGroup& group, const std::map<std::string, Matrix>& generators) {
        return rep_from_generators(group, generators);
      },
      py::arg("group"), py::arg("generators"));
  m.def("tensor_rep", &tensor_rep, py::arg("rep"), py::arg("parties"));

  py::class_<CharacterTable>(m, "CharacterTable")
      .def_readonly("irrep_labels", &CharacterTable::irrep_labels)
      .def_readonly("dims", &CharacterTable::dims)
      .def_readonly("table", &CharacterTable::table)
      .def_property_readonly(
          "classes", [](const CharacterTable& ct) { return ct.classes.classes; });
  m.def("character_table_for_family", &character_table_for_family, py::arg("group"));
  m.def("irrep_multiplicities", &irrep_multiplicities, py::arg("rep"), py::arg("table"));
  m.def(
      "isotypic_projectors",
      [](const Representation& rep, const CharacterTable& ct) {
        const IsotypicDecomposition iso = isotypic_projectors(rep, ct);
        py::list components;
        for (const auto& component : iso.components)
          components.append(py::make_tuple(component.irrep, component.projector));
        return py::make_tuple(iso.multiplicities, components);
      },
      py::arg("rep"), py::arg("table"),
      "returns (multiplicities, [(irrep index, projector), ...])");

  py::class_<LocalEventSet>(m, "LocalEventSet")
      .def_readonly("rep", &LocalEventSet::rep)
      .def_readonly("states", &LocalEventSet::states)
      .def_property_readonly("observables", &LocalEventSet::observable_count)
      .def_property_readonly("outcomes", &LocalEventSet::outcome_count)
      .def("outcome_state", &LocalEventSet::outcome_state, py::arg("observable"),
           py::arg("outcome"))
      .def("event_of_element", [](const LocalEventSet& local, int element) {
        const auto& event = local.event_of_element.at(element);
        return py::make_tuple(event.observable, event.outcome);
      });
  m.def("classify_local_events", &classify_local_events, py::arg("rep"), py::arg("init"));

  py::class_<BellScenario>(m, "BellScenario")
      .def_readonly("parties", &BellScenario::parties)
      .def_readonly("local", &BellScenario::local)
      .def_readonly("joint_rep", &BellScenario::joint_rep)
      .def_property_readonly("observables", &BellScenario::observable_count)
      .def_property_readonly("outcomes", &BellScenario::outcome_count)
      .def_property_readonly("group_order", &BellScenario::group_order)
      .def("events",
           [](const BellScenario& scenario) {
             py::list out;
             for (const auto& [event, coefficient] : scenario.coefficients)
               out.append(py::make_tuple(event_to_tuple(event), coefficient));
             return out;
           })
      .def("orbits", [](const BellScenario& scenario) {
        py::list out;
        for (const auto& orbit : scenario.orbits) {
          py::list words, events;
          for (int g : orbit.seed.elements)
            words.append(scenario.local.rep.group.name(g));
          for (const Event& event : orbit.events) events.append(event_to_tuple(event));
          out.append(py::make_tuple(words, events));
        }
        return out;
      });

  m.def(
      "build_scenario",
      [](const LocalEventSet& local, int parties, const py::object& seeds) {
        return build_scenario(local, parties, seeds_from_object(local.rep.group, seeds));
      },
      py::arg("local"), py::arg("parties"), py::arg("seeds"),
      "seeds: list of per-party element words or indices");
  m.def(
      "event_probabilities",
      [](const BellScenario& scenario, const Vector& state) {
        py::dict out;
        for (const auto& [event, p] : event_probabilities(scenario, state))
          out[event_to_tuple(event)] = p;
        return out;
      },
      py::arg("scenario"), py::arg("state"));

  m.def("build_seed_operator", &build_seed_operator, py::arg("scenario"));
  m.def("build_bell_operator", &build_bell_operator, py::arg("scenario"));
  m.def(
      "classical_bound",
      [](const BellScenario& scenario) {
        const ClassicalBoundResult result = classical_bound(scenario);
        return py::make_tuple(result.value, result.witness.outcome);
      },
      py::arg("scenario"), "returns (bound, witness outcome table)");
  m.def(
      "bell_spectrum",
      [](const BellScenario& scenario, const std::string& method) {
        const auto pairs = method == "dense"      ? dense_eigenpairs(scenario)
                           : method == "gram"     ? gram_eigenpairs(scenario)
                           : method == "symmetry" ? symmetry_eigenpairs(scenario)
                                                  : throw Error("unknown method '" + method + "'");
        std::vector<double> values;
        for (const auto& pair : pairs) values.push_back(pair.value);
        return values;
      },
      py::arg("scenario"), py::arg("method") = "dense");

  py::class_<BellCertificate>(m, "BellCertificate")
      .def_readonly("classical_bound", &BellCertificate::classical_bound)
      .def_readonly("quantum_value", &BellCertificate::quantum_value)
      .def_readonly("optimal_state", &BellCertificate::optimal_state)
      .def_readonly("method_values", &BellCertificate::method_values)
      .def_readonly("method_agreement", &BellCertificate::method_agreement)
      .def_readonly("violation", &BellCertificate::violation)
      .def_readonly("top_eigenspace_dim", &BellCertificate::top_eigenspace_dim)
      .def_property_readonly("optimal_probabilities",
                             [](const BellCertificate& cert) {
                               py::dict out;
                               for (const auto& [event, p] : cert.optimal_probabilities)
                                 out[event_to_tuple(event)] = p;
                               return out;
                             })
      .def("__repr__", [](const BellCertificate& cert) {
        return "BellCertificate(S_c=" + std::to_string(cert.classical_bound) +
               ", S_q=" + std::to_string(cert.quantum_value) + ")";
      });
  m.def(
      "quantum_maximum",
      [](const BellScenario& scenario, const std::string& method) {
        return quantum_maximum(scenario, method_from_string(method));
      },
      py::arg("scenario"), py::arg("method") = "all");

  py::class_<NonlocalGame>(m, "NonlocalGame")
      .def_readonly("parties", &NonlocalGame::parties)
      .def_readonly("questions", &NonlocalGame::questions)
      .def_readonly("winning", &NonlocalGame::winning)
      .def_property_readonly("question_count", &NonlocalGame::question_count);
  m.def(
      "game_from_scenario",
      [](const BellScenario& scenario, const std::string& policy) {
        return game_from_scenario(scenario, policy_from_string(policy));
      },
      py::arg("scenario"), py::arg("policy"));
  m.def(
      "classical_game_value",
      [](const NonlocalGame& game) {
        const GameValue value = classical_game_value(game);
        return py::make_tuple(value.win_count, value.question_count, value.witness.answer);
      },
      py::arg("game"), "returns (win count, question count, witness strategy)");
  m.def("quantum_game_value", &quantum_game_value, py::arg("game"), py::arg("scenario"),
        py::arg("state"));

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([](const Representation& rep, const Vector& init, int parties, int orbits,
                       long long trials, std::uint64_t rng_seed, bool exhaustive) {
             SearchConfig config;
             config.rep = rep;
             config.init = init;
             config.parties = parties;
             config.orbits = orbits;
             config.trials = trials;
             config.rng_seed = rng_seed;
             config.exhaustive = exhaustive;
             return config;
           }),
           py::arg("rep"), py::arg("init"), py::arg("parties") = 2, py::arg("orbits") = 2,
           py::arg("trials") = 0, py::arg("rng_seed") = 0, py::arg("exhaustive") = false);
  py::class_<SearchHit>(m, "SearchHit")
      .def_property_readonly("seeds",
                             [](const SearchHit& hit) {
                               py::list out;
                               for (const OrbitSeed& seed : hit.seeds) out.append(seed.elements);
                               return out;
                             })
      .def_readonly("classical_bound", &SearchHit::classical_bound)
      .def_readonly("quantum_value", &SearchHit::quantum_value)
      .def_readonly("margin", &SearchHit::margin)
      .def("__repr__", [](const SearchHit& hit) {
        return "SearchHit(S_c=" + std::to_string(hit.classical_bound) +
               ", S_q=" + std::to_string(hit.quantum_value) + ")";
      });
  m.def(
      "random_orbit_search",
      [](const SearchConfig& config) { return random_orbit_search(config); },
      py::arg("config"));
  m.def("search_space_size", &search_space_size, py::arg("config"));

  m.def("registry_names", [] { return registry_names(); });
  m.def("builtin_representation_names", [] { return builtin_representation_names(); });
  m.def("builtin_representation", &builtin_representation, py::arg("name"));
  m.def("builtin_initial_state", &builtin_initial_state, py::arg("name"));

  m.def(
      "reproduce_document",
      [](const std::string& name) {
        const ReproduceOutcome outcome = run_reproduce(name);
        return py::make_tuple(outcome.document.dump(), outcome.golden_ok);
      },
      py::arg("name"), "returns (result document JSON text, golden values matched)");
  m.def(
      "analyze_document",
      [](const std::string& text, const std::string& method, const std::string& game) {
        const ScenarioInput input = scenario_input_from_json(nlohmann::json::parse(text));
        const std::optional<std::string> game_override =
            game.empty() ? std::nullopt : std::optional<std::string>(game);
        return run_analyze(input, method_from_string(method), game_override).dump();
      },
      py::arg("text"), py::arg("method") = "all", py::arg("game") = "",
      "analyze a scenario JSON document, returns the result document JSON text");
}
