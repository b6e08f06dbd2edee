#include "gamma4/census.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gamma4 {

using nlohmann::ordered_json;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void fail_at(ErrorCode code, const std::filesystem::path& path, std::size_t line, const std::string& what) {
  throw Error(code, path.string() + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_csv(const std::string& line, const std::filesystem::path& path, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (quoted) fail_at(ErrorCode::ParseError, path, line_no, "unterminated quoted field");
  out.push_back(std::move(cur));
  return out;
}

// Lines of a CSV file with the expected header; each callback gets the fields
// and the 1-based line number.
template <typename F>
void for_each_csv_row(const std::filesystem::path& path, const std::vector<std::string>& header, F&& f) {
  std::istringstream in(slurp(path));
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split_csv(line, path, line_no);
    if (!seen_header) {
      if (fields != header) {
        std::string want;
        for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
        fail_at(ErrorCode::ParseError, path, line_no, "expected header '" + want + "'");
      }
      seen_header = true;
      continue;
    }
    if (fields.size() != header.size())
      fail_at(ErrorCode::ParseError, path, line_no,
              "expected " + std::to_string(header.size()) + " fields, found " + std::to_string(fields.size()));
    f(fields, line_no);
  }
  if (!seen_header) fail_at(ErrorCode::ParseError, path, line_no, "missing header");
}

long long parse_int(const std::string& s, const std::filesystem::path& path, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail_at(ErrorCode::ParseError, path, line, std::string("bad ") + what + " '" + s + "'");
  }
}

bool parse_flag(const std::string& s, const std::filesystem::path& path, std::size_t line, const char* what) {
  if (s == "Y" || s == "y") return true;
  if (s == "N" || s == "n") return false;
  fail_at(ErrorCode::ParseError, path, line, std::string("bad ") + what + " flag '" + s + "' (want Y or N)");
}

ordered_json matrix_json(const IntMatrix& m) { return m.to_rows(); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<KnotEntry> read_knot_table(const std::filesystem::path& path) {
  std::vector<KnotEntry> out;
  std::set<std::string> names;
  for_each_csv_row(path, {"name", "pd_code", "signature", "arf", "determinant", "slice", "alternating"},
                   [&](const std::vector<std::string>& f, std::size_t line) {
                     KnotEntry e;
                     e.record.name = normalize_name(f[0]);
                     if (e.record.name.empty()) fail_at(ErrorCode::ParseError, path, line, "empty knot name");
                     e.pd_code = f[1];
                     e.record.signature = static_cast<int>(parse_int(f[2], path, line, "signature"));
                     e.record.arf = static_cast<int>(parse_int(f[3], path, line, "arf"));
                     e.record.determinant = parse_int(f[4], path, line, "determinant");
                     e.record.slice = parse_flag(f[5], path, line, "slice");
                     e.record.alternating = parse_flag(f[6], path, line, "alternating");
                     try {
                       e.record.validate();
                     } catch (const Error& err) {
                       fail_at(err.code(), path, line, err.what());
                     }
                     if (!arf_matches_determinant(e.record))
                       fail_at(ErrorCode::DataMismatch, path, line,
                               e.record.name + ": Arf invariant disagrees with the determinant mod 8");
                     if (!names.insert(e.record.name).second)
                       fail_at(ErrorCode::DataMismatch, path, line, "duplicate knot " + e.record.name);
                     out.push_back(std::move(e));
                   });
  return out;
}

std::vector<KnownValue> read_known(const std::filesystem::path& path) {
  std::vector<KnownValue> out;
  for_each_csv_row(path, {"name", "gamma4"}, [&](const std::vector<std::string>& f, std::size_t line) {
    KnownValue k{normalize_name(f[0]), static_cast<int>(parse_int(f[1], path, line, "gamma4"))};
    if (k.name.empty()) fail_at(ErrorCode::ParseError, path, line, "empty knot name");
    if (k.gamma4 < 1) fail_at(ErrorCode::ParseError, path, line, "gamma4 must be positive");
    out.push_back(std::move(k));
  });
  return out;
}

std::vector<Certificate> read_certificates(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n')) + 1;
    fail_at(ErrorCode::ParseError, path, line, e.what());
  }
  if (!doc.is_array()) fail_at(ErrorCode::ParseError, path, 1, "expected a JSON array of certificates");

  std::vector<Certificate> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& c = doc[i];
    const std::string where = path.string() + ": certificate #" + std::to_string(i + 1);
    try {
      const std::string kind = c.at("kind").get<std::string>();
      const std::string prov = c.value("provenance", std::string{});
      if (kind == "slice") {
        out.push_back({SliceFact{c.at("knot").get<std::string>()}, prov});
      } else if (kind == "known") {
        out.push_back({KnownGamma4{c.at("knot").get<std::string>(), c.at("gamma4").get<int>()}, prov});
      } else if (kind == "band_move") {
        out.push_back({BandMove{c.at("source").get<std::string>(), c.at("framing").get<int>(),
                                c.at("target").get<std::string>()},
                       prov});
      } else {
        throw Error(ErrorCode::ParseError, where + ": unknown kind '" + kind + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, where + ": " + e.what());
    }
  }
  return out;
}

IntMatrix read_gram(const std::filesystem::path& path) {
  try {
    return parse_matrix(slurp(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

ExpectedValues read_expected(const std::filesystem::path& path) {
  ExpectedValues ev;
  try {
    const auto doc = ordered_json::parse(slurp(path));
    for (const auto& [value, names] : doc.at("gamma4").items())
      for (const auto& n : names) {
        const std::string name = normalize_name(n.get<std::string>());
        if (!ev.gamma4.emplace(name, std::stoi(value)).second)
          throw Error(ErrorCode::ParseError, path.string() + ": " + name + " listed twice");
      }
    if (doc.contains("congruence_group_sizes"))
      for (const auto& [cls, size] : doc["congruence_group_sizes"].items()) ev.group_sizes[std::stoi(cls)] = size.get<int>();
    if (doc.contains("congruence_listings"))
      for (const auto& [cls, names] : doc["congruence_listings"].items())
        for (const auto& n : names) ev.group_listings[std::stoi(cls)].push_back(normalize_name(n.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return ev;
}

KnotAnalysis analyze_knot(const KnotEntry& entry, const EmbedOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  KnotAnalysis a;
  a.record = entry.record;
  const std::string& name = a.record.name;

  KnotDiagram d;
  try {
    d = parse_pd(entry.pd_code, name);
  } catch (const Error& e) {
    throw Error(e.code(), name + ": " + e.what());
  }
  if (d.is_unknot_sentinel()) throw Error(ErrorCode::DataMismatch, name + ": empty PD code");
  auto [f0, f1] = goeritz_pair(d);
  a.forms = {f0, f1};
  for (const auto& f : a.forms) {
    const Int det = determinant(f.gram);
    if ((det < 0 ? -det : det) != a.record.determinant)
      throw Error(ErrorCode::DataMismatch, name + ": Goeritz determinant " + std::to_string(det) +
                                               " does not match the tabulated " + std::to_string(a.record.determinant));
  }

  a.congruence_class = congruence_class(a.record.signature, a.record.arf);
  if (a.congruence_class == 4) {
    a.lower.value = 2;
    a.lower.reasons.push_back("congruence: sigma + 4 Arf = 4 mod 8");
  } else {
    InvariantRecord rec = a.record;
    a.lattice_forms = a.forms;
    if (a.congruence_class == 6) {
      a.lattice_on_mirror = true;
      rec = a.record.mirrored();
      auto [m0, m1] = goeritz_pair(mirror(d));
      m0.knot = m1.knot = "-" + name;
      a.lattice_forms = {m0, m1};
    }
    try {
      a.donaldson = donaldson_obstruction(rec, a.lattice_forms, opts);
      if (a.donaldson->bound) {
        a.lower.value = 2;
        a.lower.reasons.push_back(std::string("lattice: G + [-l] does not embed in the diagonal lattice") +
                                  (a.lattice_on_mirror ? " (mirror)" : "") +
                                  (a.congruence_class == 0 ? " (both colorings)" : ""));
      }
      if (a.donaldson->exhausted) a.lattice_note = "node cap reached; the lattice test is inconclusive";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WrongDefiniteness) throw;
      a.lattice_note = std::string("not applicable: ") + e.what();
    }
  }

  try {
    a.linking = linking_form(a.forms[0]);
    a.moebius = moebius_obstruction(*a.linking);
    if (a.moebius->precondition_failed) a.linking_note = "not applicable: a prime divides the order to an even power";
    if (a.moebius->bound) {
      a.lower.value = 2;
      a.lower.reasons.push_back("linking form: " + std::to_string(a.linking->q) + "/" + std::to_string(a.linking->n) +
                                " has no generator of self-linking +-1/n");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonCyclic) throw;
    a.linking_note = "not applicable: first homology of the double branched cover is not cyclic";
  }
  a.seconds = seconds_since(t0);
  return a;
}

std::vector<KnotAnalysis> analyze_census_serial(const std::vector<KnotEntry>& entries, const EmbedOptions& opts) {
  std::vector<KnotAnalysis> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(analyze_knot(e, opts));
  return out;
}

std::vector<KnotAnalysis> analyze_census(const std::vector<KnotEntry>& entries, const EmbedOptions& opts, int jobs) {
  const auto n = static_cast<std::ptrdiff_t>(entries.size());
  std::vector<KnotAnalysis> out(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#else
  (void)jobs;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = analyze_knot(entries[i], opts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::size_t drop_unrelated_certificates(std::vector<Certificate>& certs, const std::vector<KnotEntry>& census) {
  // Upper bounds flow from target to source, so only moves whose source is
  // reachable from a census knot can change a census bound.
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& c : certs)
    if (const auto* b = std::get_if<BandMove>(&c.fact))
      out[normalize_name(b->source)].push_back(normalize_name(b->target));
  std::set<std::string> reached;
  std::vector<std::string> stack;
  for (const auto& e : census) stack.push_back(normalize_name(e.record.name));
  while (!stack.empty()) {
    auto k = std::move(stack.back());
    stack.pop_back();
    if (!reached.insert(k).second) continue;
    if (const auto it = out.find(k); it != out.end())
      for (const auto& t : it->second) stack.push_back(t);
  }
  const auto before = certs.size();
  std::erase_if(certs, [&](const Certificate& c) {
    const auto* b = std::get_if<BandMove>(&c.fact);
    return b && !reached.count(normalize_name(b->source));
  });
  return before - certs.size();
}

namespace {

ordered_json form_json(const GoeritzForm& f) {
  ordered_json j;
  j["coloring"] = f.coloring;
  j["rank"] = f.rank;
  j["deleted_index"] = f.deleted_index;
  j["definiteness"] = std::string(to_string(f.definiteness));
  j["determinant"] = determinant(f.gram);
  j["gram"] = matrix_json(f.gram);
  return j;
}

ordered_json knot_json(const KnotAnalysis& a, const Bound& b, const std::vector<std::string>& chain) {
  ordered_json j;
  if (b.resolved()) {
    j["gamma4"] = b.lower;
  } else {
    j["gamma4"] = nullptr;
    j["interval"] = {b.lower, b.upper ? ordered_json(*b.upper) : ordered_json(nullptr)};
  }
  j["signature"] = a.record.signature;
  j["arf"] = a.record.arf;
  j["determinant"] = a.record.determinant;
  j["alternating"] = a.record.alternating;
  j["congruence_class"] = a.congruence_class;
  j["goeritz_forms"] = ordered_json::array();
  for (const auto& f : a.forms) j["goeritz_forms"].push_back(form_json(f));

  ordered_json lat;
  if (a.congruence_class == 4) {
    lat["status"] = "skipped (congruence bound applies)";
  } else if (a.donaldson) {
    lat["on_mirror"] = a.lattice_on_mirror;
    lat["obstructed"] = a.donaldson->bound.has_value();
    lat["attempts"] = ordered_json::array();
    for (const auto& t : a.donaldson->attempts) {
      ordered_json at;
      at["form"] = t.form;
      at["ell"] = t.ell;
      at["status"] = std::string(to_string(t.result.status));
      at["nodes"] = t.result.nodes_searched;
      if (t.result.status == EmbeddingStatus::Embeddable) at["witness"] = matrix_json(t.result.witness);
      lat["attempts"].push_back(std::move(at));
    }
  }
  if (!a.lattice_note.empty()) lat["note"] = a.lattice_note;
  j["lattice"] = std::move(lat);

  ordered_json lk;
  if (a.linking) {
    lk["n"] = a.linking->n;
    lk["q"] = a.linking->q;
    lk["obstructed"] = a.moebius && a.moebius->bound.has_value();
  }
  if (!a.linking_note.empty()) lk["note"] = a.linking_note;
  j["linking_form"] = std::move(lk);

  j["lower_bound"] = b.lower;
  j["lower_bound_reasons"] = b.sources;
  j["upper_bound"] = b.upper ? ordered_json(*b.upper) : ordered_json(nullptr);
  j["derivation"] = chain;
  return j;
}

}  // namespace

CensusRun run_census(const CensusConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusRun run;
  const auto entries = read_knot_table(cfg.knots_file);
  const auto known = read_known(cfg.known_file);
  auto certs = read_certificates(cfg.certificates_file);
  std::optional<ExpectedValues> expected;
  if (cfg.expected_file) expected = read_expected(*cfg.expected_file);

  run.skipped_certificates = drop_unrelated_certificates(certs, entries);
  const auto graph = ingest(certs, [&] {
    std::vector<InvariantRecord> recs;
    for (const auto& e : entries) recs.push_back(e.record);
    return recs;
  }(), known);

  const auto t_analysis = std::chrono::steady_clock::now();
  run.analyses = analyze_census(entries, cfg.embed, cfg.jobs);
  const double analysis_seconds = seconds_since(t_analysis);

  std::map<std::string, LowerBound> lower;
  for (const auto& a : run.analyses) lower[a.record.name] = a.lower;
  run.bounds = propagate(graph, lower);
  run.resolution = resolve_census(run.bounds, expected ? std::optional(expected->gamma4) : std::nullopt);

  std::map<std::string, int> cls;
  for (const auto& a : run.analyses) {
    ++run.group_sizes[a.congruence_class];
    cls[a.record.name] = a.congruence_class;
  }

  auto& rep = run.report;
  ordered_json summary;
  summary["knots"] = run.analyses.size();
  ordered_json counts = ordered_json::object();
  for (const auto& [v, names] : run.resolution.by_value) counts[std::to_string(v)] = names.size();
  summary["counts"] = counts;
  ordered_json values = ordered_json::object();
  for (const auto& [v, names] : run.resolution.by_value) values[std::to_string(v)] = names;
  summary["values"] = values;
  summary["unresolved"] = ordered_json::array();
  for (const auto& n : run.resolution.unresolved) {
    const auto& b = run.bounds.knots.at(n);
    summary["unresolved"].push_back(
        {{"knot", n}, {"lower", b.lower}, {"upper", b.upper ? ordered_json(*b.upper) : ordered_json(nullptr)}});
  }
  ordered_json groups = ordered_json::object();
  for (const auto& [c, size] : run.group_sizes) groups[std::to_string(c)] = size;
  summary["congruence_groups"] = groups;
  summary["skipped_certificates"] = run.skipped_certificates;
  if (expected) summary["expected_mismatches"] = run.resolution.mismatches;
  rep["summary"] = std::move(summary);

  // Census knots settled directly by a tabulated value rather than a band move or slice fact.
  ordered_json external = ordered_json::array();
  for (const auto& [n, b] : run.bounds.knots) {
    if (b.via || !b.upper) continue;
    const auto& src = run.bounds.seed_source.at(n);
    if (src.rfind("known", 0) == 0) external.push_back({{"knot", n}, {"source", src}});
  }
  rep["external_resolutions"] = std::move(external);

  ordered_json flags = ordered_json::array();
  if (expected) {
    for (const auto& [c, size] : expected->group_sizes) {
      const int have = run.group_sizes.count(c) ? run.group_sizes.at(c) : 0;
      if (have != size)
        flags.push_back("congruence class " + std::to_string(c) + " has " + std::to_string(have) + " knots, expected " +
                        std::to_string(size));
    }
    for (const auto& [c, names] : expected->group_listings) {
      std::map<std::string, int> times;
      for (const auto& n : names) ++times[n];
      for (const auto& [n, t] : times) {
        if (t > 1) flags.push_back(n + " is listed " + std::to_string(t) + " times under class " + std::to_string(c));
        auto it = cls.find(n);
        if (it == cls.end())
          flags.push_back(n + " is listed under class " + std::to_string(c) + " but is not in the knot table");
        else if (it->second != c)
          flags.push_back(n + " is listed under class " + std::to_string(c) + " but the table gives class " +
                          std::to_string(it->second));
      }
      for (const auto& [n, k] : cls)
        if (k == c && !times.count(n))
          flags.push_back(n + " has class " + std::to_string(c) + " but is missing from that listing");
    }
  }
  rep["flags"] = std::move(flags);

  ordered_json knots = ordered_json::object();
  for (const auto& a : run.analyses)
    knots[a.record.name] = knot_json(a, run.bounds.knots.at(a.record.name), derivation(run.bounds, a.record.name));
  rep["knots"] = std::move(knots);

  ordered_json per = ordered_json::object();
  for (const auto& a : run.analyses) per[a.record.name] = a.seconds;
  run.timing["analysis_seconds"] = analysis_seconds;
  run.timing["total_seconds"] = seconds_since(t0);
  run.timing["per_knot_seconds"] = std::move(per);
  return run;
}

int cmd_census(const CensusConfig& cfg, std::ostream& out) {
  const auto run = run_census(cfg);
  if (cfg.output) {
    ordered_json doc = run.report;
    doc["timing"] = run.timing;
    std::ofstream f(*cfg.output);
    if (!f) throw Error(ErrorCode::ParseError, cfg.output->string() + ": cannot write report");
    f << doc.dump(2) << '\n';
  }
  const auto& r = run.resolution;
  out << "knots: " << run.analyses.size() << '\n';
  for (const auto& [v, names] : r.by_value) out << "gamma4 = " << v << ": " << names.size() << '\n';
  out << "unresolved: " << r.unresolved.size();
  for (const auto& n : r.unresolved) {
    const auto& b = run.bounds.knots.at(n);
    out << ' ' << n << "[" << b.lower << "," << (b.upper ? std::to_string(*b.upper) : "?") << "]";
  }
  out << '\n';
  if (cfg.expected_file) out << "expected mismatches: " << r.mismatches.size() << '\n';
  for (const auto& f : run.report["flags"]) out << "flag: " << f.get<std::string>() << '\n';
  for (const auto& e : run.report["external_resolutions"])
    out << "external: " << e["knot"].get<std::string>() << " (" << e["source"].get<std::string>() << ")\n";
  out << "time: " << run.timing["total_seconds"].get<double>() << " s\n";
  return r.unresolved.empty() && r.mismatches.empty() ? 0 : 1;
}

int cmd_knot(const std::string& name, const CensusConfig& cfg, std::ostream& out) {
  const std::string key = normalize_name(name);
  const auto entries = read_knot_table(cfg.knots_file);
  const auto known = read_known(cfg.known_file);
  auto certs = read_certificates(cfg.certificates_file);
  auto it = std::find_if(entries.begin(), entries.end(), [&](const KnotEntry& e) { return e.record.name == key; });
  if (it == entries.end()) throw Error(ErrorCode::UnknownKnot, key + " is not in " + cfg.knots_file.string());

  drop_unrelated_certificates(certs, entries);
  std::vector<InvariantRecord> recs;
  for (const auto& e : entries) recs.push_back(e.record);
  const auto graph = ingest(certs, recs, known);
  const auto a = analyze_knot(*it, cfg.embed);
  const auto state = propagate(graph, {{key, a.lower}});
  const auto& b = state.knots.at(key);

  const auto d = parse_pd(it->pd_code, key);
  const auto [c0, c1] = checkerboard(d);
  out << "knot " << key << "  (" << d.crossing_count() << " crossings, " << c0.faces.faces.size() << " faces)\n";
  out << "signature " << a.record.signature << ", Arf " << a.record.arf << ", determinant " << a.record.determinant
      << ", " << (a.record.alternating ? "alternating" : "non-alternating") << '\n';
  for (const Coloring* c : {&c0, &c1}) {
    out << "coloring " << c->id << ": " << c->white_regions.size() << " white regions, eta =";
    for (int e : c->eta) out << ' ' << (e > 0 ? '+' : '-');
    out << '\n';
  }
  for (const auto& f : a.forms) {
    out << "\nGoeritz form, coloring " << f.coloring << " (" << to_string(f.definiteness) << " definite"
        << ", det " << determinant(f.gram) << ", deleted region " << f.deleted_index << "):\n"
        << f.gram.to_string();
  }
  out << "\ncongruence class (sigma + 4 Arf mod 8): " << a.congruence_class << '\n';
  if (a.congruence_class == 4) out << "  => gamma4 >= 2\n";
  if (a.donaldson) {
    if (a.lattice_on_mirror) {
      out << "lattice test on the mirror -" << key << ":\n";
      for (const auto& f : a.lattice_forms)
        if (f.definiteness == Definiteness::Negative) out << f.gram.to_string();
    }
    for (const auto& t : a.donaldson->attempts) {
      out << "  " << t.form << " form + [-" << t.ell << "] into -Id: " << to_string(t.result.status);
      if (t.result.status == EmbeddingStatus::Embeddable) {
        out << ", witness:\n" << t.result.witness.to_string();
      } else {
        out << " after " << t.result.nodes_searched << " nodes\n";
      }
    }
    out << "  => " << (a.donaldson->bound ? "gamma4 >= 2" : "no bound") << '\n';
  }
  if (!a.lattice_note.empty()) out << "lattice test: " << a.lattice_note << '\n';
  if (a.linking) {
    out << "linking form: " << a.linking->q << "/" << a.linking->n << " on Z/" << a.linking->n;
    out << (a.moebius && a.moebius->bound ? "  => gamma4 >= 2" : "  (no bound)") << '\n';
  }
  if (!a.linking_note.empty()) out << "linking form: " << a.linking_note << '\n';
  out << "\ncertificate chain:\n";
  for (const auto& line : derivation(state, key)) out << "  " << line << '\n';
  for (const auto& [e, prov] : graph.edges)
    if (b.via && e.source == key && e.target == b.via->target && e.framing == b.via->framing && !prov.empty())
      out << "  (" << prov << ")\n";
  if (b.resolved()) {
    out << "\ngamma4(" << key << ") = " << b.lower << '\n';
    return 0;
  }
  out << "\ngamma4(" << key << ") in [" << b.lower << ", " << (b.upper ? std::to_string(*b.upper) : "?") << "]\n";
  return 1;
}

int cmd_embed(const std::filesystem::path& gram_file, std::size_t target_rank, const EmbedOptions& opts,
              std::ostream& out) {
  const auto p = EmbeddingProblem::make(read_gram(gram_file), target_rank);
  const auto r = embed(p, opts);
  out << to_string(r.status) << '\n';
  switch (r.status) {
    case EmbeddingStatus::Embeddable:
      out << r.witness.to_string();
      return 0;
    case EmbeddingStatus::NotEmbeddable:
      out << "exhausted after " << r.nodes_searched << " nodes\n";
      return 0;
    case EmbeddingStatus::ResourceExhausted:
      out << "node cap reached after " << r.nodes_searched << " nodes\n";
      return 3;
  }
  return 3;
}

}  // namespace gamma4
