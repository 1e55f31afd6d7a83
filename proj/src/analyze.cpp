#include "grplat/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "grplat/coset_poset.hpp"
#include "grplat/complex.hpp"
#include "grplat/interval.hpp"
#include "grplat/invariants.hpp"
#include "grplat/labeling.hpp"
#include "grplat/totient.hpp"

namespace grplat {

using nlohmann::json;

Limits load_limits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, "config: " + std::string(e.what()));
  }
  Limits limits;
  if (j.contains("enumeration_cap")) limits.enumeration_cap = j["enumeration_cap"].get<std::uint64_t>();
  if (j.contains("face_cap")) limits.face_cap = j["face_cap"].get<std::uint64_t>();
  return limits;
}

namespace {

json integer_to_json(const Integer& v) { return v.str(); }

void run_consistency_assertions(const AnalysisRecord& rec, const SubgroupInterval& I) {
  // Hall identity (full check on small intervals, top-member spot check above)
  if (I.size() <= 40) {
    internal_check(hall_identity_holds(I), "Hall identity fails");
  } else {
    Integer total = 0;
    for (int l = 0; l < I.size(); ++l)
      total += euler_totient_moebius(I.subinterval(I.bottom(), l));
    internal_check(total == Integer(rec.index), "Hall identity fails at the top member");
  }
  if (rec.boolean_lattice) {
    internal_check(rec.phi > 0, "Boolean interval must have phi > 0");
    internal_check(rec.w_cyclic, "Boolean interval must be w-cyclic");
    if (*rec.rank == 2)
      internal_check(rec.phi_hat >= 1, "rank-2 Boolean interval must have phi^ >= 1");
    if (rec.dedekind)
      internal_check(*rec.group_complemented, "Dedekind Boolean interval must be group-complemented");
    if (*rec.group_complemented)
      internal_check(rec.phi == rec.phi_hat, "group-complemented interval must have phi^ = phi");
  }
}

}  // namespace

AnalysisRecord analyze_interval(const CatalogEntry& entry, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  AnalysisRecord rec;
  rec.degree = entry.degree;
  rec.id = entry.id;
  rec.name = entry.name;

  PermGroup G = PermGroup::from_generators(entry.degree, entry.generators,
                                           options.limits.enumeration_cap);
  PermGroup H = stabilizer(G, 0);
  rec.group_order = G.order();
  rec.stabilizer_order = H.order();
  rec.index = G.order() / H.order();

  SubgroupInterval I = SubgroupInterval::build(G, H);
  rec.member_count = I.size();

  BooleanCheck bc = I.boolean_structure();
  rec.boolean_lattice = bc.ok();
  if (bc.ok()) {
    rec.rank = bc.structure->rank;
    rec.group_complemented = I.is_group_complemented();
  }
  rec.distributive = I.is_distributive();
  rec.dedekind = I.is_dedekind();
  rec.w_cyclic = is_w_cyclic(I).value;
  rec.strongly_w_cyclic = is_strongly_w_cyclic(I).value;
  if (H.order() < G.order()) rec.core_free = is_core_free(H, G);

  TotientReport tot = totient_report(I);  // asserts phi_direct = phi_moebius etc.
  rec.phi = tot.phi_moebius;
  rec.phi_hat = tot.phi_hat;
  rec.coset_poset_mu = tot.coset_poset_mu;

  if (options.homology) {
    CosetPoset C = CosetPoset::build(I, false);
    HomologyReport h = homology_of_poset(C.poset(), options.limits.face_cap);
    rec.f_vector = h.f_vector;
    rec.betti = h.betti;
  }
  if (options.cm) {
    CosetPoset C = CosetPoset::build(I, true);
    if (C.poset().is_graded())
      rec.cohen_macaulay = is_cohen_macaulay(C.poset(), options.limits.face_cap).cohen_macaulay;
  }
  if (options.el && rec.boolean_lattice) {
    CosetPoset C = CosetPoset::build(I, true);
    EdgeLabeling el = el_labeling(I, C);
    rec.dual_el_ok = verify_dual_el_labeling(C, el).ok;
    rec.decreasing_chains = count_decreasing_maximal_chains(C.poset().dual(), el.dual());
    internal_check(*rec.dual_el_ok == *rec.group_complemented,
                   "Theorem: dual EL-labeling iff group-complemented");
  }

  LambdaResult lam = lambda_invariant(I);
  rec.lambda_value = lam.value;
  rec.lambda_no_chain = !lam.value.has_value();

  run_consistency_assertions(rec, I);

  rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

std::string AnalysisRecord::to_json_line() const {
  json j;
  j["schema"] = "grplat.analysis/1";
  j["degree"] = degree;
  j["id"] = id;
  j["name"] = name;
  j["group_order"] = group_order;
  j["stabilizer_order"] = stabilizer_order;
  j["index"] = index;
  j["members"] = member_count;
  j["boolean"] = boolean_lattice;
  if (rank) j["rank"] = *rank;
  j["distributive"] = distributive;
  if (group_complemented) j["group_complemented"] = *group_complemented;
  j["dedekind"] = dedekind;
  j["w_cyclic"] = w_cyclic;
  j["strongly_w_cyclic"] = strongly_w_cyclic;
  if (core_free) j["core_free"] = *core_free;
  j["phi"] = integer_to_json(phi);
  j["phi_hat"] = integer_to_json(phi_hat);
  j["coset_poset_mu"] = integer_to_json(coset_poset_mu);
  if (f_vector) j["f_vector"] = *f_vector;
  if (betti) j["betti"] = *betti;
  if (cohen_macaulay) j["cohen_macaulay"] = *cohen_macaulay;
  if (dual_el_ok) j["dual_el"] = *dual_el_ok;
  if (decreasing_chains) j["decreasing_chains"] = integer_to_json(*decreasing_chains);
  if (lambda_value)
    j["lambda"] = *lambda_value;
  else
    j["lambda"] = nullptr;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

namespace {

std::set<std::pair<int, int>> already_logged(const std::string& path) {
  std::set<std::pair<int, int>> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      done.emplace(j.at("degree").get<int>(), j.at("id").get<int>());
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error,
                  "results log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return done;
}

}  // namespace

ScanSummary scan_catalog(const std::vector<CatalogEntry>& entries, ScanFilter filter, int jobs,
                         const std::string& out_path, const AnalyzeOptions& options) {
  ScanSummary summary;
  const std::set<std::pair<int, int>> done = already_logged(out_path);

  std::vector<const CatalogEntry*> todo;
  for (const auto& e : entries) {
    ++summary.considered;
    if (done.contains({e.degree, e.id})) {
      ++summary.resumed;
      continue;
    }
    todo.push_back(&e);
  }

  struct Outcome {
    int degree, id;
    std::optional<AnalysisRecord> record;
    std::string error;  // logged and skipped
  };
  std::vector<Outcome> outcomes(todo.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < todo.size(); i = next.fetch_add(1)) {
      const CatalogEntry& e = *todo[i];
      outcomes[i].degree = e.degree;
      outcomes[i].id = e.id;
      try {
        outcomes[i].record = analyze_interval(e, options);
      } catch (const Error& err) {
        outcomes[i].error = err.what();
      }
    }
  };
  const int n_threads = std::max(1, jobs);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(outcomes.begin(), outcomes.end(), [](const Outcome& a, const Outcome& b) {
    return std::make_pair(a.degree, a.id) < std::make_pair(b.degree, b.id);
  });

  std::ofstream out(out_path, std::ios::app);
  if (!out) throw Error(Errc::io_error, "cannot open results log '" + out_path + "'");
  for (const auto& oc : outcomes) {
    if (!oc.record) {
      ++summary.errors;
      json j;
      j["schema"] = "grplat.analysis/1";
      j["degree"] = oc.degree;
      j["id"] = oc.id;
      j["error"] = oc.error;
      out << j.dump() << "\n";
      continue;
    }
    const AnalysisRecord& rec = *oc.record;
    if (filter == ScanFilter::boolean_only && !rec.boolean_lattice) continue;
    out << rec.to_json_line() << "\n";
    ++summary.analyzed;
    if (rec.boolean_lattice) {
      ++summary.boolean_count;
      const int rank = *rec.rank;
      if (rec.phi_hat == 0) ++summary.phi_hat_zero;
      if (rank >= 1 && rec.phi_hat < Integer(1) << (rank - 1)) ++summary.phi_hat_below_2_rank_minus_1;
      if (rec.phi_hat < Integer(1) << rank) ++summary.phi_hat_below_2_rank;
      if (rec.cohen_macaulay && !*rec.cohen_macaulay) ++summary.non_cm_boolean;
      if (!*rec.group_complemented)
        summary.non_group_complemented.emplace_back(rec.degree, rec.id);
    }
  }
  if (!out) throw Error(Errc::io_error, "failed writing results log");
  return summary;
}

}  // namespace grplat
