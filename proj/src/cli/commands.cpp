#include "levelcert/commands.hpp"

#include "levelcert/koszul.hpp"

namespace levelcert {

using nlohmann::json;

namespace {

json base_document(const std::string& command) {
  return json{{"object", nullptr},           {"command", command},      {"lower", nullptr},
              {"upper", nullptr},            {"exact", nullptr},        {"certificates", json::array()},
              {"cited", json::array()},      {"homology", json::array()}, {"betti", nullptr},
              {"notes", json::array()}};
}

json matrix_json(const PolyRing& S, const PolyMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(S.format(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json ranks_json(const ChainComplex& F) {
  json out = json::array();
  if (F.empty_window()) return out;
  for (int i = F.lo(); i <= F.hi(); ++i) out.push_back(F.rank(i));
  return out;
}

void put_report(json& doc, const LevelReport& rep, const CancelToken* cancel) {
  doc["lower"] = rep.lower;
  doc["upper"] = rep.upper ? json(*rep.upper) : json(nullptr);
  doc["exact"] = rep.exact;
  for (const auto& c : rep.certificates) doc["certificates"].push_back(certificate_json(c, cancel));
  for (const auto& c : rep.cited) doc["cited"].push_back(certificate_json(c, cancel));
  for (const auto& n : rep.notes) doc["notes"].push_back(n);
  if (!rep.upper) doc["notes"].push_back("upper bound is infinite (null)");
}

const NamedComplex& need_complex(const Session& s, const CommandFlags& f) {
  if (!f.complex) throw UsageError("--complex is required");
  const NamedComplex* C = s.complex(*f.complex);
  if (!C) throw UsageError("unknown complex '" + *f.complex + "'");
  return *C;
}

const NamedModule& need_module(const Session& s, const CommandFlags& f) {
  const NamedModule* M = s.module(*f.module);
  if (!M) throw UsageError("unknown module '" + *f.module + "'");
  return *M;
}

const NamedRing& need_ring(const Session& s, const CommandFlags& f) {
  if (f.ring) {
    const NamedRing* R = s.ring(*f.ring);
    if (!R) throw UsageError("unknown ring '" + *f.ring + "'");
    return *R;
  }
  if (s.rings.size() == 1) return s.rings.front();
  throw UsageError(s.rings.empty() ? "the session declares no ring" : "--ring is required with several rings");
}

// A declared ideal, or the maximal ideal of the chosen ring for `m`.
std::pair<std::string, Ideal> need_ideal(const Session& s, const CommandFlags& f) {
  if (!f.ideal) throw UsageError("--ideal is required");
  if (const NamedIdeal* I = s.ideal(*f.ideal)) {
    if (f.ring && *f.ring != I->ring) throw UsageError("ideal '" + I->name + "' is not in ring '" + *f.ring + "'");
    return {I->ring, I->ideal};
  }
  if (*f.ideal == "m") {
    const NamedRing& R = need_ring(s, f);
    return {R.name, maximal_ideal(R.ring)};
  }
  throw UsageError("unknown ideal '" + *f.ideal + "'");
}

void homology_into(json& doc, const ChainComplex& F, const CancelToken* cancel) {
  if (F.empty_window()) return;
  HomologyOptions ho;
  ho.cancel = cancel;
  for (int i = F.lo(); i <= F.hi(); ++i) doc["homology"].push_back(homology_json(homology(F, i, ho)));
}

CommandResult cmd_homology(const Session& s, const CommandFlags& f) {
  CommandResult r{base_document("homology")};
  const auto& C = need_complex(s, f);
  r.document["object"] = C.name;
  r.document["betti"] = ranks_json(C.complex);
  homology_into(r.document, C.complex, f.cancel);
  return r;
}

CommandResult cmd_resolve(const Session& s, const CommandFlags& f) {
  CommandResult r{base_document("resolve")};
  auto& doc = r.document;
  if (f.module) {
    const auto& M = need_module(s, f);
    doc["object"] = M.name;
    ResolveOptions ro;
    ro.cancel = f.cancel;
    Resolution res = resolve_module(M.module, f.steps, ro);
    doc["betti"] = res.betti;
    doc["complete"] = res.complete;
    if (res.complete) {
      int pd = -1;
      for (std::size_t i = 0; i < res.betti.size(); ++i) {
        if (res.betti[i] > 0) pd = static_cast<int>(i);
      }
      doc["pd"] = pd;
    } else {
      doc["pd"] = nullptr;
      doc["notes"].push_back("resolution continues past " + std::to_string(f.steps) +
                             " steps: projective dimension >= " + std::to_string(f.steps + 1));
    }
    json tw = json::array();
    for (int i = 0; i <= res.complex.hi() && !res.complex.empty_window(); ++i) tw.push_back(res.complex.twists(i));
    doc["twists"] = tw;
    return r;
  }
  const auto& C = need_complex(s, f);
  doc["object"] = C.name;
  ChainComplex P = resolution_of_complex(C.complex);
  doc["betti"] = ranks_json(P);
  doc["range"] = P.empty_window() ? json(nullptr) : json::array({P.lo(), P.hi()});
  return r;
}

CommandResult cmd_koszul(const Session& s, const CommandFlags& f) {
  if (f.power < 1) throw UsageError("--power must be positive");
  CommandResult r{base_document("koszul")};
  auto& doc = r.document;
  auto [ring_name, base] = need_ideal(s, f);
  if (base.is_unit()) throw UsageError("the unit ideal has no Koszul complex");
  if (base.is_zero()) throw UsageError("the zero ideal has no Koszul complex");
  const auto& R = base.ring();
  Ideal I = f.power == 1 ? base : ideal_power(base, f.power);
  auto gens = minimal_generators(I);
  KoszulData K = koszul(R, gens);
  std::string name = "K(" + *f.ideal + (f.power > 1 ? "^" + std::to_string(f.power) : "") + ")";
  doc["object"] = name;
  doc["ring"] = ring_name;
  json g = json::array();
  for (const auto& p : gens) g.push_back(R->poly().format(p));
  doc["generators"] = g;
  doc["betti"] = ranks_json(K.complex);
  homology_into(doc, K.complex, f.cancel);
  doc["depth"] = depth_via_koszul(I, gens);
  ReportOptions opts;
  opts.koszul = KoszulTag{minimal_generators(base), f.power, gens};
  opts.cancel = f.cancel;
  put_report(doc, level_report(K.complex, opts), f.cancel);
  return r;
}

CommandResult cmd_level(const Session& s, const CommandFlags& f) {
  CommandResult r{base_document("level")};
  auto& doc = r.document;
  if (f.module) {
    const auto& M = need_module(s, f);
    doc["object"] = M.name;
    put_report(doc, level_of_module(M.module, f.steps, f.cancel), f.cancel);
    return r;
  }
  const auto& C = need_complex(s, f);
  doc["object"] = C.name;
  doc["betti"] = ranks_json(C.complex);
  ReportOptions opts;
  opts.cancel = f.cancel;
  if (f.ideal) {
    auto [ring_name, I] = need_ideal(s, f);
    if (ring_name != C.ring) throw UsageError("ideal and complex live over different rings");
    opts.ideals.push_back(I);
  }
  put_report(doc, level_report(C.complex, opts), f.cancel);
  return r;
}

struct Assertions {
  json list = json::array();
  bool all = true;
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    list.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    all = all && pass;
  }
};

void suite_everyn(Assertions& a, const RingHandle& R, const CommandFlags& f) {
  for (int n = 0; n <= f.max_n; ++n) {
    std::string name = "everyn n=" + std::to_string(n);
    try {
      EveryNExample ex = everyn_example(R, n, f.cancel);
      bool pass = ex.upper.value == n + 1 && ex.lower.value == n + 1 && replay(ex.upper, nullptr, f.cancel) &&
                  replay(ex.lower, nullptr, f.cancel);
      a.add(name, pass,
            "lower " + std::to_string(ex.lower.value) + ", upper " + std::to_string(ex.upper.value));
    } catch (const PreconditionError& e) {
      a.add(name, false, e.what());
    }
  }
}

void suite_gaps(Assertions& a, const Session& s, const NamedRing& R, const CommandFlags& f) {
  ResolveOptions ro;
  ro.check_complete = false;
  ro.cancel = f.cancel;
  ChainComplex P = resolve_module(residue_field(R.ring), 2, ro).complex;
  BoundCertificate low = lower_bound_gap(P, f.cancel);
  BoundCertificate up = upper_bound(P);
  a.add("gap bound on the resolution of k truncated at 2", low.value == up.value && replay(low, nullptr, f.cancel),
        "lower " + std::to_string(low.value) + ", upper " + std::to_string(up.value));
  for (const auto& C : s.complexes) {
    if (C.ring != R.name) continue;
    BoundCertificate g = lower_bound_gap(C.complex, f.cancel);
    BoundCertificate u = upper_bound(C.complex);
    a.add("gap bound on " + C.name, g.value <= u.value && replay(g, nullptr, f.cancel),
          "lower " + std::to_string(g.value) + ", upper " + std::to_string(u.value));
  }
}

void suite_pd(Assertions& a, const Session& s, const NamedRing& R, const CommandFlags& f) {
  auto check = [&](const std::string& name, const ModulePresentation& M, std::optional<int> expected) {
    LevelReport rep = level_of_module(M, f.steps, f.cancel);
    bool pass = !rep.upper || rep.lower <= *rep.upper;
    for (const auto& c : rep.certificates) pass = pass && replay(c, nullptr, f.cancel);
    if (expected) pass = pass && rep.exact && rep.lower == *expected;
    if (!rep.upper) pass = pass && rep.lower == f.steps + 1;
    std::string detail = "lower " + std::to_string(rep.lower) + ", upper " +
                         (rep.upper ? std::to_string(*rep.upper) : std::string("infinite"));
    a.add(name, pass, detail);
  };
  // J in m^2: k has finite projective dimension exactly when there are no relations
  std::optional<int> k_level;
  if (R.ring->relations().empty()) k_level = R.ring->edim() + 1;
  check("level of k", residue_field(R.ring), k_level);
  check("level of R", free_module(R.ring, {0}), 1);
  for (const auto& M : s.modules) {
    if (M.ring == R.name) check("level of " + M.name, M.module, std::nullopt);
  }
}

void suite_koszul(Assertions& a, const Session& s, const NamedRing& R, const CommandFlags& f) {
  const auto& ring = R.ring;
  Ideal m = maximal_ideal(ring);
  auto vars = minimal_generators(m);
  KoszulData K = koszul(ring, vars);
  ReportOptions opts;
  opts.koszul = KoszulTag{vars, 1, vars};
  opts.cancel = f.cancel;
  LevelReport rep = level_report(K.complex, opts);
  a.add("level of K(m) is edim + 1", rep.exact && rep.lower == ring->edim() + 1,
        "lower " + std::to_string(rep.lower) + ", edim " + std::to_string(ring->edim()));
  Polynomial y;
  for (const auto& v : vars) y = ring->poly().add(y, v);
  a.add("Koszul homology splits after appending a redundant generator", check_well_defined(ring, vars, y).pass);
  a.add("Koszul cycles lie in m K", cycles_in_mK(ring, vars));
  for (const auto& I : s.ideals) {
    if (I.ring != R.name || I.ideal.is_unit() || I.ideal.is_zero()) continue;
    auto gens = minimal_generators(I.ideal);
    BoundCertificate c = lower_bound_minimal_gap(koszul(ring, gens).complex, f.cancel);
    int depth = depth_via_koszul(I.ideal, gens);
    a.add("depth bound for K(" + I.name + ")", c.value >= depth + 1 && replay(c, nullptr, f.cancel),
          "certified " + std::to_string(c.value) + ", depth " + std::to_string(depth));
  }
}

CommandResult cmd_verify(const Session& s, const CommandFlags& f) {
  if (!f.suite) throw UsageError("--suite is required");
  if (f.max_n < 0) throw UsageError("--max-n must be non-negative");
  CommandResult r{base_document("verify")};
  const auto& R = need_ring(s, f);
  r.document["object"] = R.name;
  r.document["suite"] = *f.suite;
  Assertions a;
  if (*f.suite == "everyn") {
    suite_everyn(a, R.ring, f);
  } else if (*f.suite == "gaps") {
    suite_gaps(a, s, R, f);
  } else if (*f.suite == "pd") {
    suite_pd(a, s, R, f);
  } else if (*f.suite == "koszul") {
    suite_koszul(a, s, R, f);
  } else {
    throw UsageError("unknown suite '" + *f.suite + "' (gaps, pd, koszul, everyn)");
  }
  int passed = 0;
  for (const auto& x : a.list) passed += x["pass"].get<bool>();
  r.document["assertions"] = a.list;
  r.document["passed"] = passed;
  r.document["failed"] = static_cast<int>(a.list.size()) - passed;
  r.ok = a.all;
  return r;
}

}  // namespace

json homology_json(const HomologyData& h) {
  return json{{"degree", h.degree},
              {"zero", h.is_zero},
              {"length", h.length ? json(*h.length) : json(nullptr)},
              {"dimension", h.hilbert.dimension},
              {"finite_length", h.finite_length},
              {"min_generators", h.min_gens},
              {"hilbert_numerator", h.hilbert.numerator},
              {"hilbert_low", h.hilbert.low},
              {"window_from", h.window_from},
              {"window", h.window}};
}

json certificate_json(const BoundCertificate& c, const CancelToken* cancel) {
  json j{{"kind", to_string(c.kind)},
         {"value", c.value},
         {"certified", c.certified()},
         {"transcript", c.transcript}};
  json w = json::object();
  if (c.ghost) {
    w["a"] = c.ghost->a;
    w["b"] = c.ghost->b;
    w["ghost_maps"] = static_cast<int>(c.ghost->ghosts.size());
  }
  if (c.syzygy_h0) {
    const auto& M = *c.syzygy_h0;
    w["syzygy_h0"] = {{"twists", M.twists}, {"presentation", matrix_json(M.ring->poly(), M.presentation)}};
  }
  if (c.witness_column >= 0) w["column"] = c.witness_column;
  j["witness"] = w;
  j["replayed"] = replay(c, nullptr, cancel);
  return j;
}

CommandResult run_command(const std::string& command, const Session& session, const CommandFlags& flags) {
  if (flags.steps <= 0) throw UsageError("--steps must be positive");
  if (command == "homology") return cmd_homology(session, flags);
  if (command == "resolve") return cmd_resolve(session, flags);
  if (command == "koszul") return cmd_koszul(session, flags);
  if (command == "level") return cmd_level(session, flags);
  if (command == "verify") return cmd_verify(session, flags);
  throw UsageError("unknown command '" + command + "' (homology, resolve, koszul, level, verify)");
}

}  // namespace levelcert
