#include "tarski/io.hpp"

#include "tarski/error.hpp"

namespace tarski {

namespace {

json words(const std::vector<Word>& ws, const Alphabet& a) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(format_word(w, a));
  return out;
}

std::vector<Word> parse_words(const json& j, const Alphabet& a) {
  std::vector<Word> out;
  for (const auto& s : j) out.push_back(parse_word(s.get<std::string>(), a));
  return out;
}

}  // namespace

json to_json(const CoreGraph& c) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < c.vertex_count(); ++v) j["vertices"].push_back(v);
  j["base"] = c.base();
  j["edges"] = json::array();
  for (const auto& e : c.edges()) j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", c.alphabet().name(e.gen)}});
  return j;
}

std::string core_to_json(const CoreGraph& c) { return to_json(c).dump(2) + "\n"; }

json to_json(const Window& w) {
  json j;
  j["alphabet"] = w.alphabet.names();
  j["provenance"] = w.provenance;
  j["radius"] = w.radius;
  j["base"] = w.base();
  j["vertices"] = json::array();
  for (int v = 0; v < w.size(); ++v)
    j["vertices"].push_back({{"id", v},
                             {"rep", format_word(w.reps[static_cast<std::size_t>(v)], w.alphabet)},
                             {"dist", w.dist[static_cast<std::size_t>(v)]},
                             {"frontier", w.frontier(v)}});
  j["edges"] = json::array();
  for (int v = 0; v < w.size(); ++v)
    for (int g = 0; g < w.alphabet.rank(); ++g) {
      int t = w.step(v, Letter(g, 1));
      if (t != -1) j["edges"].push_back({{"from", v}, {"to", t}, {"label", w.alphabet.name(g)}});
    }
  return j;
}

std::string window_to_json(const Window& w) { return to_json(w).dump(2) + "\n"; }

Window window_from_json(const json& j) {
  try {
    Window w;
    w.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    w.provenance = j.value("provenance", "");
    w.radius = j.at("radius").get<int>();
    const auto& vs = j.at("vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].at("id").get<std::size_t>() != i) throw Error(ErrorKind::Parse, "window vertices must be numbered 0..n-1");
      w.reps.push_back(parse_word(vs[i].at("rep").get<std::string>(), w.alphabet));
      w.dist.push_back(vs[i].at("dist").get<int>());
    }
    w.next.assign(vs.size() * static_cast<std::size_t>(w.slots()), -1);
    for (const auto& e : j.at("edges")) {
      int from = e.at("from").get<int>(), to = e.at("to").get<int>();
      auto g = w.alphabet.find(e.at("label").get<std::string>());
      if (!g || from < 0 || to < 0 || from >= w.size() || to >= w.size())
        throw Error(ErrorKind::Parse, "bad window edge");
      Letter l(*g, 1);
      w.next[static_cast<std::size_t>(from * w.slots() + l.slot())] = to;
      w.next[static_cast<std::size_t>(to * w.slots() + l.inverse().slot())] = from;
    }
    return w;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("window JSON: ") + e.what());
  }
}

json to_json(const TranslatingSets& ts, const Alphabet& alphabet) {
  return {{"S1", words(ts.S1, alphabet)}, {"S2", words(ts.S2, alphabet)}};
}

TranslatingSets sets_from_json(const json& j, const Alphabet& alphabet) {
  try {
    return {parse_words(j.at("S1"), alphabet), parse_words(j.at("S2"), alphabet)};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("translating sets JSON: ") + e.what());
  }
}

json certificate(const std::string& kind, const Window& w, json data) {
  return {{"kind", kind}, {"provenance", w.provenance}, {"radius", w.radius}, {"data", std::move(data)}};
}

json decomposition_data(const Decomposition& d, const DecompositionReport& r, const Alphabet& alphabet) {
  json j = to_json(d.sets, alphabet);
  j["pieces"] = d.pieces;
  j["verified"] = r.ok;
  j["disjoint"] = r.disjoint;
  j["checked"] = r.checked;
  j["unverifiable"] = r.unverifiable;
  j["uncovered_p"] = r.uncovered_p;
  j["uncovered_q"] = r.uncovered_q;
  return j;
}

Decomposition decomposition_from_json(const json& data, const Alphabet& alphabet) {
  try {
    Decomposition d;
    d.sets = sets_from_json(data, alphabet);
    d.pieces = data.at("pieces").get<std::vector<std::vector<int>>>();
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("decomposition JSON: ") + e.what());
  }
}

json hall_data(const TranslatingSets& ts, const HallResult& r, const Alphabet& alphabet) {
  json j = to_json(ts, alphabet);
  j["satisfied"] = r.satisfied;
  j["matching"] = r.matching;
  j["pool"] = r.pool;
  if (r.violation) {
    j["A1"] = r.violation->A1;
    j["A2"] = r.violation->A2;
    j["union_size"] = r.violation->union_size;
    j["required"] = r.violation->required;
  }
  return j;
}

json doubling_data(const DoublingCert& c) {
  json j{{"ok", c.ok}, {"forest_edges", c.forest_edges}, {"removed", json::array()}};
  for (const auto& e : c.removed) j["removed"].push_back({e.from, e.to, e.gen});
  if (!c.ok) {
    j["failure"] = c.failure;
    j["witness"] = c.witness;
  }
  return j;
}

json lemma6_data(const Lemma6Certificate& c) {
  json j = to_json(c.sets, c.window.alphabet);
  j["A1"] = c.violation.A1;
  j["A2"] = c.violation.A2;
  j["union_size"] = c.violation.union_size;
  j["required"] = c.violation.required;
  j["core"] = to_json(c.core);
  return j;
}

json to_json(const MinLengthResult& r, const Alphabet& alphabet) {
  json j{{"m", r.m}, {"n", r.n}, {"p", r.p}, {"radius", r.radius}, {"checked", r.checked},
         {"verdict", r.pass ? "PASS" : "FAIL"}};
  if (!r.pass) {
    j["u"] = format_word(r.u, alphabet);
    j["v"] = format_word(r.v, alphabet);
    j["witness"] = format_word(r.witness, alphabet);
    j["witness_length"] = r.witness.size();
  }
  return j;
}

json to_json(const FindMResult& r, const Alphabet& alphabet) {
  json j{{"certificate", to_json(r.certificate, alphabet)}, {"failures", json::array()}};
  for (const auto& f : r.failures) j["failures"].push_back(to_json(f, alphabet));
  return j;
}

json to_json(const LowerReport& r, const Alphabet& alphabet) {
  json j{{"status", std::string(to_string(r.status))}, {"reason", r.reason}};
  if (r.status == LowerStatus::Rejected) return j;
  j["normalized"] = to_json(r.normalized, alphabet);
  j["tuple"] = words(r.tuple, alphabet);
  j["tuple_index"] = r.tuple_index;
  if (r.status == LowerStatus::Violation) {
    j["box"] = {{"k", r.box.k}, {"M", r.box.M}, {"union_size", r.box.union_size}, {"required", r.box.required}};
    j["set_size"] = r.set_size;
    j["union_size"] = r.union_size;
    j["required"] = r.required;
    j["verified"] = r.verified;
  }
  return j;
}

json to_json(const Tower5Report& r) {
  json j{{"ok", r.ok},
         {"failures", r.failures},
         {"deficient_vertex", r.deficient_vertex},
         {"deficient_degree", r.deficient_degree},
         {"spine_constraint", r.spine_constraint},
         {"attach_indegree_below_full", r.attach_indegree},
         {"girth_bound", r.girth_bound},
         {"no_loops", r.no_loops},
         {"interior_full_degree", r.full_degree},
         {"fixed_points", {{"checked", r.fixed_checked}, {"ok", r.fixed_points}}},
         {"doubling", doubling_data(r.doubling)},
         {"doubling_samples", {{"count", r.doubling_samples}, {"ok", r.doubling_samples_ok}}}};
  if (r.lemma6) j["lemma6"] = lemma6_data(*r.lemma6);
  return j;
}

}  // namespace tarski
