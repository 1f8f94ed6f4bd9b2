// Command line front end. Exit codes: 0 ok, 2 violation certificate found, 1 error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tarski/error.hpp"
#include "tarski/filtration.hpp"
#include "tarski/io.hpp"
#include "tarski/paradox.hpp"
#include "tarski/schreier.hpp"
#include "tarski/stallings.hpp"
#include "tarski/towers.hpp"

using namespace tarski;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kViolation = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Precondition, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Precondition, "cannot write " + path.string());
  out << text;
}

// Appends `--key value` pairs from a JSON object so that they override the
// flags given on the command line (the last occurrence wins).
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::vector<std::string> out;
  std::string config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config = args[++i];
      continue;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
      continue;
    }
    out.push_back(args[i]);
  }
  if (config.empty()) return out;
  json j = read_json(config);
  if (!j.is_object()) throw Error(ErrorKind::Parse, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) out.push_back("--" + key);
      continue;
    }
    out.push_back("--" + key);
    out.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

struct Options {
  std::string alphabet = "x y";
  std::uint64_t seed = 1;
  std::size_t budget = 2'000'000;
  bool dot = false, as_json = false;
  std::string gens, with, word, out, window_file, cert_file, s1 = "1, x", s2 = "1, y", pool, cand1, cand2;
  std::string oracle = "fg", a = "x", b = "y", c = "z";
  int n = 1, m_max = 16, radius = 4, r = 4, tuples = 3, nmax = 1, pairs = 2, samples = 100, pool_radius = -1;
  std::uint32_t p = 2;
};

Alphabet alphabet_of(const Options& o) { return Alphabet::parse(o.alphabet); }

// Free generators of the subgroup read off a core: one per non-tree edge.
GenTuple core_basis(const CoreGraph& c) {
  AbelianMap am(c);
  auto words = spanning_words(c);
  GenTuple out;
  for (const auto& e : am.basis_edges()) {
    Word w = words[static_cast<std::size_t>(e.from)];
    w.push_back(Letter(e.gen, 1));
    out.push_back(multiply(w, invert(words[static_cast<std::size_t>(e.to)])));
  }
  return out;
}

void print_core(const CoreGraph& c, const Options& o) {
  if (o.dot) {
    std::cout << core_to_dot(c);
  } else if (o.as_json) {
    std::cout << core_to_json(c);
  } else {
    auto idx = subgroup_index(c);
    std::cout << "vertices: " << c.vertex_count() << "\nedges: " << c.edge_count() << "\nrank: " << rank(c)
              << "\nindex: " << (idx ? std::to_string(*idx) : "infinite")
              << "\nbasis: " << format_tuple(core_basis(c), c.alphabet()) << "\n";
  }
}

Oracle make_oracle(const Options& o, const Alphabet& a, std::unique_ptr<AbelianMap>& keep) {
  if (o.oracle == "trivial") return oracle_trivial();
  CoreGraph c = build_core(parse_tuple(o.gens, a), a);
  if (o.oracle == "fg") return oracle_fg(c);
  if (o.oracle == "gamma2") {
    keep = std::make_unique<AbelianMap>(c);
    return oracle_gamma2(*keep);
  }
  throw Error(ErrorKind::Precondition, "unknown oracle " + o.oracle + " (fg, gamma2, trivial)");
}

Window load_or_build_window(const Options& o, std::unique_ptr<AbelianMap>& keep) {
  if (!o.window_file.empty()) return window_from_json(read_json(o.window_file));
  Alphabet a = alphabet_of(o);
  return expand(make_oracle(o, a, keep), a, o.radius, o.budget);
}

std::vector<int> pool_of(const Options& o, const Window& w) {
  std::vector<int> pool;
  if (!o.pool.empty()) {
    std::istringstream in(o.pool);
    for (std::string tok; std::getline(in, tok, ',');) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      int v = std::stoi(tok);
      if (v < 0 || v >= w.size()) throw Error(ErrorKind::Precondition, "pool vertex out of range: " + tok);
      pool.push_back(v);
    }
    return pool;
  }
  const int limit = o.pool_radius >= 0 ? o.pool_radius : w.radius - 1;
  for (int v : w.interior_vertices())
    if (w.dist[static_cast<std::size_t>(v)] <= limit) pool.push_back(v);
  return pool;
}

int cmd_paradox_verify(const Options& o) {
  if (!o.cert_file.empty()) {
    json cert = read_json(o.cert_file);
    Window w = !o.window_file.empty() ? window_from_json(read_json(o.window_file))
                                      : window_from_json(cert.at("window"));
    Decomposition d = decomposition_from_json(cert.at("data"), w.alphabet);
    DecompositionReport r = verify_decomposition(w, d);
    std::cout << certificate("decomposition", w, decomposition_data(d, r, w.alphabet)).dump(2) << "\n";
    return r.ok ? kOk : kError;
  }
  Alphabet a = alphabet_of(o);
  if (a.rank() < 2) throw Error(ErrorKind::Precondition, "need at least two generators");
  Window w = expand(oracle_trivial(), a, o.radius, o.budget);
  Decomposition d = free_action_decomposition(w, Word::generator(0), Word::generator(1));
  DecompositionReport r = verify_decomposition(w, d);
  json cert = certificate("decomposition", w, decomposition_data(d, r, a));
  if (!o.out.empty()) {
    json full = cert;
    full["window"] = to_json(w);
    write_file(o.out, full.dump(2) + "\n");
    cert["data"]["pieces"] = "written to " + o.out;
  }
  std::cout << cert.dump(2) << "\n";
  return r.ok ? kOk : kError;
}

int cmd_paradox_hall(const Options& o) {
  std::unique_ptr<AbelianMap> keep;
  Window w = load_or_build_window(o, keep);
  TranslatingSets ts{parse_tuple(o.s1, w.alphabet), parse_tuple(o.s2, w.alphabet)};
  auto pool = pool_of(o, w);
  HallResult r = hall_check(w, ts, pool);
  std::cout << certificate("hall_violation", w, hall_data(ts, r, w.alphabet)).dump(2) << "\n";
  return r.satisfied ? kOk : kViolation;
}

int cmd_paradox_lemma6(const Options& o) {
  // Three letters are needed; the two-letter default is widened.
  Alphabet a = o.alphabet == "x y" ? Alphabet({"x", "y", "z"}) : alphabet_of(o);
  Lemma6Certificate c =
      lemma6_certificate(parse_word(o.a, a), parse_word(o.b, a), parse_word(o.c, a), o.r, a);
  json cert = certificate("hall_violation", c.window, lemma6_data(c));
  cert["window"] = to_json(c.window);
  std::cout << cert.dump(2) << "\n";
  return kViolation;
}

int cmd_verify(const Options& o) {
  if (o.cert_file.empty()) throw Error(ErrorKind::Precondition, "verify needs --cert");
  json cert = read_json(o.cert_file);
  Window w = !o.window_file.empty() ? window_from_json(read_json(o.window_file)) : window_from_json(cert.at("window"));
  const std::string kind = cert.at("kind").get<std::string>();
  const json& data = cert.at("data");
  if (kind == "decomposition") {
    DecompositionReport r = verify_decomposition(w, decomposition_from_json(data, w.alphabet));
    std::cout << "decomposition: " << (r.ok ? "verified" : "REJECTED") << " (" << r.checked << " interior vertices, "
              << r.unverifiable << " unverifiable)\n";
    return r.ok ? kOk : kError;
  }
  if (kind == "hall_violation") {
    TranslatingSets ts = sets_from_json(data, w.alphabet);
    if (!data.contains("A1")) {
      std::cout << "hall: no violation recorded\n";
      return kOk;
    }
    HallViolation v{data.at("A1").get<std::vector<int>>(), data.at("A2").get<std::vector<int>>(),
                    data.at("union_size").get<std::size_t>(), data.at("required").get<std::size_t>()};
    bool ok = reverify(w, ts, v);
    std::cout << "hall violation: " << (ok ? "verified" : "REJECTED") << " (" << v.union_size << " < " << v.required
              << ")\n";
    return ok ? kViolation : kError;
  }
  if (kind == "doubling_cert") {
    std::vector<WindowEdge> removed;
    for (const auto& e : data.at("removed")) removed.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    std::vector<Word> S;
    for (int g = 0; g < w.alphabet.rank(); ++g) S.push_back(Word::generator(g));
    DoublingCert c = forest_doubling_cert(w, S, removed);
    std::cout << "doubling certificate: " << (c.ok ? "verified" : "REJECTED: " + c.failure) << "\n";
    return c.ok ? kOk : kError;
  }
  throw Error(ErrorKind::Parse, "unknown certificate kind " + kind);
}

int cmd_tower4(const Options& o) {
  Tower4Build b = build_tower4(o.n, o.tuples, o.radius, o.budget);
  const Tower4& t = b.tower;
  const Alphabet& a = t.alphabet();
  YPartition part = partition_Y(b);
  std::ostringstream rep;
  rep << "tower4 n=" << o.n << " N=" << t.N() << " radius=" << o.radius << " (window-relative evidence)\n";
  rep << "window: " << b.window.size() << " vertices, " << b.window.interior_vertices().size() << " interior\n";
  rep << "base core degree: " << t.base_core_degree() << "\n";
  for (int i = 1; i <= t.N(); ++i) {
    const auto& r = t.region(i);
    rep << "region " << i << ": tuple (" << format_tuple(r.tuple, a) << "), c=" << format_word(Word::reduce(std::vector<Letter>{r.c}), a)
        << ", j=" << r.j << ", core " << r.core.vertex_count() << " vertices, rank " << r.am.dimension() << "\n";
  }
  rep << "one region per z-free component: " << (part.single_region ? "yes" : "NO") << "\nY classes closed: " << (part.closed ? "yes" : "NO") << "\n";
  bool ok = part.single_region && part.closed;
  for (int j = 1; j <= o.n; ++j) {
    auto wit = verify_free_on_Yj(b, part, j, o.radius);
    rep << "Y" << j << " free up to length " << o.radius << ": "
        << (wit ? "NO, cycle " + format_word(wit->word, a) + " at vertex " + std::to_string(wit->vertex) : "yes") << "\n";
    ok = ok && !wit;
  }
  Decomposition d = tarski_upper_decomposition(b, part);
  DecompositionReport dr = verify_decomposition(b.window, d);
  rep << "upper decomposition: " << d.piece_count() << " pieces, " << (dr.ok ? "verified" : "FAILED") << " ("
      << dr.checked << " interior, " << dr.unverifiable << " unverifiable)\n";
  ok = ok && dr.ok;
  int code = ok ? kOk : kError;
  json lower;
  if (!o.cand1.empty() || !o.cand2.empty()) {
    LowerReport lr = tarski_lower_report(t, {parse_tuple(o.cand1, a), parse_tuple(o.cand2, a)}, o.m_max);
    lower = to_json(lr, a);
    rep << "lower report: " << to_string(lr.status);
    if (lr.status == LowerStatus::Violation) {
      rep << " (box M=" << lr.box.M << ", " << lr.union_size << " < " << lr.required << ")";
      if (code == kOk) code = kViolation;
    }
    rep << (lr.reason.empty() ? "" : ", " + lr.reason) << "\n";
  }
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    write_file(fs::path(o.out) / "window.json", window_to_json(b.window));
    write_file(fs::path(o.out) / "window.dot", window_to_dot(b.window));
    write_file(fs::path(o.out) / "upper_decomposition.json",
               certificate("decomposition", b.window, decomposition_data(d, dr, a)).dump(2) + "\n");
    if (!lower.is_null()) write_file(fs::path(o.out) / "lower_report.json", lower.dump(2) + "\n");
    write_file(fs::path(o.out) / "report.txt", rep.str());
  }
  if (o.as_json) {
    json j{{"report", rep.str()}, {"lower", lower}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.str();
  }
  return code;
}

int cmd_tower5(const Options& o) {
  Tower5Build b = build_tower5(o.p, o.nmax, o.pairs, o.radius, o.budget);
  Tower5Report r = verify_tower5(b, o.r, static_cast<std::size_t>(o.samples), o.seed);
  const Tower5& t = b.tower;
  const Alphabet& a = t.alphabet();
  std::ostringstream rep;
  rep << "tower5 p=" << o.p << " nmax=" << o.nmax << " pairs=" << t.count() << " depth=" << o.radius
      << " (window-relative evidence)\n";
  for (int n = 1; n <= o.nmax; ++n) rep << "m(" << n << ") = " << t.m_value(n) << "\n";
  for (int k = 1; k <= t.count(); ++k) {
    const auto& au = t.automaton(k);
    rep << "automaton " << k << " (n=" << au.n << ", i=" << au.i << "): " << au.core.vertex_count()
        << " vertices, girth " << au.girth.value_or(0) << ", attach " << au.attach << ", c="
        << format_word(Word::reduce(std::vector<Letter>{au.c}), a) << ", spine label "
        << format_word(Word::reduce(std::vector<Letter>{t.spine_label(k)}), a) << "\n";
  }
  rep << "window: " << b.window.size() << " vertices\n";
  rep << "verdict: " << (r.ok ? "ok" : "FAILED") << "\n";
  for (const auto& f : r.failures) rep << "  " << f << "\n";
  json report = to_json(r);
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    write_file(fs::path(o.out) / "window.json", window_to_json(b.window));
    write_file(fs::path(o.out) / "window.dot", window_to_dot(b.window));
    write_file(fs::path(o.out) / "doubling_cert.json",
               certificate("doubling_cert", b.window, doubling_data(r.doubling)).dump(2) + "\n");
    write_file(fs::path(o.out) / "report.json", report.dump(2) + "\n");
    write_file(fs::path(o.out) / "report.txt", rep.str());
  }
  std::cout << (o.as_json ? report.dump(2) + "\n" : rep.str());
  return r.ok ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free group subgroups, Schreier graphs and paradoxical decomposition certificates"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  Options o;
  app.add_option("--alphabet", o.alphabet, "Generator names, e.g. \"x y z\"");
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--budget", o.budget, "Vertex budget for windows");

  int code = kOk;
  auto with_gens = [&](CLI::App* s) { s->add_option("--gens", o.gens, "Comma separated generators")->required(); };
  auto with_alphabet = [&](CLI::App* s) {
    s->add_option("--alphabet", o.alphabet, "Generator names");
    s->add_option("--seed", o.seed, "Seed");
    s->add_option("--budget", o.budget, "Vertex budget");
  };

  auto* core = app.add_subcommand("core", "Stallings core of a finitely generated subgroup");
  with_gens(core);
  with_alphabet(core);
  core->add_flag("--dot", o.dot, "DOT output");
  core->add_flag("--json", o.as_json, "JSON output");
  core->callback([&] { print_core(build_core(parse_tuple(o.gens, alphabet_of(o)), alphabet_of(o)), o); });

  auto* member = app.add_subcommand("member", "Subgroup membership");
  with_gens(member);
  with_alphabet(member);
  member->add_option("--word", o.word, "Word to test")->required();
  member->callback([&] {
    Alphabet a = alphabet_of(o);
    std::cout << (is_member(build_core(parse_tuple(o.gens, a), a), parse_word(o.word, a)) ? "true" : "false") << "\n";
  });

  auto* inter = app.add_subcommand("intersect", "Intersection of two subgroups");
  with_gens(inter);
  with_alphabet(inter);
  inter->add_option("--with", o.with, "Generators of the second subgroup")->required();
  inter->add_flag("--dot", o.dot, "DOT output");
  inter->add_flag("--json", o.as_json, "JSON output");
  inter->callback([&] {
    Alphabet a = alphabet_of(o);
    print_core(intersect(build_core(parse_tuple(o.gens, a), a), build_core(parse_tuple(o.with, a), a)), o);
  });

  auto* rk = app.add_subcommand("rank", "Rank of a subgroup");
  with_gens(rk);
  with_alphabet(rk);
  rk->callback([&] { std::cout << rank(build_core(parse_tuple(o.gens, alphabet_of(o)), alphabet_of(o))) << "\n"; });

  auto* ix = app.add_subcommand("index", "Index of a subgroup");
  with_gens(ix);
  with_alphabet(ix);
  ix->callback([&] {
    auto i = subgroup_index(build_core(parse_tuple(o.gens, alphabet_of(o)), alphabet_of(o)));
    std::cout << (i ? std::to_string(*i) : "infinite") << "\n";
  });

  auto* niel = app.add_subcommand("nielsen", "Nielsen reduced generating tuple");
  with_gens(niel);
  with_alphabet(niel);
  niel->callback([&] {
    Alphabet a = alphabet_of(o);
    std::cout << format_tuple(nielsen_reduce(parse_tuple(o.gens, a)), a) << "\n";
  });

  bool series = false;
  auto* zas = app.add_subcommand("zassenhaus", "Membership in the Zassenhaus p-filtration");
  with_alphabet(zas);
  zas->add_option("--word", o.word, "Word")->required();
  zas->add_option("--n", o.n, "Filtration level")->required();
  zas->add_option("--p", o.p, "Prime");
  zas->add_flag("--series", series, "Also print the truncated Magnus expansion");
  zas->callback([&] {
    Word w = parse_word(o.word, alphabet_of(o));
    std::cout << (zassenhaus_member(w, o.n, o.p) ? "true" : "false") << "\n";
    if (series) std::cout << magnus(w, o.n, o.p).to_string() << "\n";
  });

  auto* fm = app.add_subcommand("findm", "Certify the least filtration level with no short elements");
  fm->add_option("--n", o.n, "Length parameter (words shorter than 12n)");
  fm->add_option("--p", o.p, "Prime");
  fm->add_option("--mmax", o.m_max, "Largest level tried");
  fm->add_option("--out", o.out, "Also write the certificate here");
  fm->add_option("--budget", o.budget, "Word budget");
  fm->callback([&] {
    const Alphabet a({"x", "y", "z"});
    FindMResult r = find_m(o.n, o.p, o.m_max, 3, std::max<std::size_t>(o.budget, 50'000'000));
    std::string text = to_json(r, a).dump(2) + "\n";
    if (!o.out.empty()) write_file(o.out, text);
    std::cout << text;
  });

  auto* ex = app.add_subcommand("expand", "Finite window of a Schreier graph");
  with_alphabet(ex);
  ex->add_option("--gens", o.gens, "Subgroup generators");
  ex->add_option("--oracle", o.oracle, "fg, gamma2 or trivial");
  ex->add_option("--radius", o.radius, "Radius");
  ex->add_flag("--dot", o.dot, "DOT output (default JSON)");
  ex->callback([&] {
    std::unique_ptr<AbelianMap> keep;
    Window w = load_or_build_window(o, keep);
    std::cout << (o.dot ? window_to_dot(w) : window_to_json(w));
  });

  auto* par = app.add_subcommand("paradox", "Paradoxical decomposition certificates");
  par->require_subcommand(1);
  auto* pv = par->add_subcommand("verify", "Verify a decomposition (or build the classical one)");
  with_alphabet(pv);
  pv->add_option("--cert", o.cert_file, "Decomposition certificate JSON");
  pv->add_option("--window", o.window_file, "Window JSON");
  pv->add_option("--radius", o.radius, "Ball radius when building");
  pv->add_option("--out", o.out, "Write the certificate here");
  pv->callback([&] { code = cmd_paradox_verify(o); });

  auto* ph = par->add_subcommand("hall", "Hall condition via matching");
  with_alphabet(ph);
  ph->add_option("--window", o.window_file, "Window JSON (otherwise built from --gens/--oracle)");
  ph->add_option("--gens", o.gens, "Subgroup generators");
  ph->add_option("--oracle", o.oracle, "fg, gamma2 or trivial");
  ph->add_option("--radius", o.radius, "Radius");
  ph->add_option("--S1", o.s1, "First translating set");
  ph->add_option("--S2", o.s2, "Second translating set");
  ph->add_option("--pool", o.pool, "Comma separated vertex ids");
  ph->add_option("--pool-radius", o.pool_radius, "Pool = interior vertices within this distance");
  ph->callback([&] { code = cmd_paradox_hall(o); });

  auto* pl = par->add_subcommand("lemma6", "Hall violation in the core of <a^r, (a^b)^r, (a^c)^r>");
  with_alphabet(pl);
  pl->add_option("--a", o.a, "a");
  pl->add_option("--b", o.b, "b");
  pl->add_option("--c", o.c, "c");
  pl->add_option("--r", o.r, "r");
  pl->callback([&] { code = cmd_paradox_lemma6(o); });

  auto* t4 = app.add_subcommand("tower4", "Derived-subgroup tower over x, y1..yn, z");
  t4->add_option("--n", o.n, "n");
  t4->add_option("--tuples", o.tuples, "Number of realized tuples");
  t4->add_option("--radius", o.radius, "Window radius");
  t4->add_option("--out", o.out, "Output directory");
  t4->add_option("--S1", o.cand1, "Candidate translating set for the lower report");
  t4->add_option("--S2", o.cand2, "Candidate translating set for the lower report");
  t4->add_option("--mmax", o.m_max, "Largest box side");
  t4->add_option("--budget", o.budget, "Vertex budget");
  t4->add_flag("--json", o.as_json, "JSON output");
  t4->callback([&] { code = cmd_tower4(o); });

  auto* t5 = app.add_subcommand("tower5", "Filtration tower over x, y, z");
  t5->add_option("--p", o.p, "Prime");
  t5->add_option("--nmax", o.nmax, "Largest n");
  t5->add_option("--pairs", o.pairs, "Number of attached automata");
  t5->add_option("--radius", o.radius, "Hanging tree depth");
  t5->add_option("--out", o.out, "Output directory");
  t5->add_option("--samples", o.samples, "Random doubling samples");
  t5->add_option("--r", o.r, "Lemma6 parameter");
  t5->add_option("--seed", o.seed, "Seed");
  t5->add_option("--budget", o.budget, "Vertex budget");
  t5->add_flag("--json", o.as_json, "JSON output");
  t5->callback([&] { code = cmd_tower5(o); });

  auto* ver = app.add_subcommand("verify", "Re-verify a certificate file");
  ver->add_option("--cert", o.cert_file, "Certificate JSON")->required();
  ver->add_option("--window", o.window_file, "Window JSON (if not embedded)");
  ver->callback([&] { code = cmd_verify(o); });

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return code;
}
