#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "klab/clifford.hpp"
#include "klab/eig.hpp"
#include "klab/error.hpp"
#include "klab/json_io.hpp"
#include "klab/kernels.hpp"
#include "klab/kgroup.hpp"
#include "klab/oracles.hpp"
#include "klab/replab.hpp"
#include "klab/version.hpp"
#include "klab/words.hpp"

namespace {

using json = klab::io::json;
using klab::Int;
using klab::domain_error;
using klab::words::Word;

struct Output {
  std::string path;  // empty = stdout
  int indent = 2;    // < 0 = compact
};

void emit(const json& report, const Output& out, const std::string& human) {
  std::string text = out.indent < 0 ? report.dump() : report.dump(out.indent);
  if (out.path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out.path);
    if (!f) throw domain_error("cannot open output file " + out.path);
    f << text << "\n";
  }
  if (!human.empty()) std::cerr << human << "\n";
}

json report_skeleton(const std::string& command, json inputs) {
  json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["result"] = json::object();
  r["instrumentation"] = json::object();
  r["seed"] = nullptr;
  r["version"] = klab::kVersion;
  return r;
}

klab::words::Alphabet group_from(const std::string& name, int n) {
  if (name == "cn") {
    if (n < 1) throw domain_error("--group cn needs --n >= 1");
    return klab::words::cn_alphabet(n);
  }
  if (name == "c") return klab::words::cinf_alphabet();
  if (name == "k0") return klab::words::k0_alphabet();
  if (name == "k") return klab::words::k_alphabet();
  throw domain_error("unknown group " + name);
}

Int parse_big(const std::string& text, const char* what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw domain_error(std::string("not an integer for ") + what + ": " +
                       text);
  }
}

json trace_instrumentation(const klab::kgroup::ReductionTrace& tr) {
  return klab::io::to_json(tr);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures and unitary representation experiments "
               "for a lamplighter-like HNN group"};
  app.require_subcommand(1);
  app.fallthrough();  // --out / --json-indent may follow the subcommand
  app.set_version_flag("--version", std::string(klab::kVersion));

  Output out;
  app.add_option("--json-indent", out.indent,
                 "JSON indent for reports (negative = compact)")
      ->capture_default_str();
  app.add_option("--out", out.path, "write the JSON report to a file");

  std::string group = "k";
  int group_n = 0;
  std::string norm_name = "frobenius";
  std::uint64_t seed = 0;
  double tolerance = 1e-9;

  auto add_group = [&](CLI::App* cmd, bool with_norm = false) {
    cmd->add_option("--group", group, "alphabet: cn | c | k0 | k")
        ->check(CLI::IsMember({"cn", "c", "k0", "k"}))
        ->capture_default_str();
    cmd->add_option("--n", group_n, "rank for --group cn");
    if (with_norm)
      cmd->add_option("--norm", norm_name,
                      "frobenius | operator | schatten:<p>")
          ->capture_default_str();
  };

  // ---- normal-form ------------------------------------------------------
  std::string word1, word2;
  auto* cmd_nf = app.add_subcommand(
      "normal-form", "canonical form of a word in the chosen group");
  cmd_nf->add_option("word", word1, "input word")->required();
  add_group(cmd_nf);
  cmd_nf->callback([&] {
    auto a = group_from(group, group_n);
    Word w = klab::words::parse_word(word1, a);
    json report = report_skeleton(
        "normal-form",
        {{"word", word1}, {"group", klab::words::alphabet_name(a)}});
    std::string human;
    switch (a.ctx) {
      case klab::words::Ctx::Cn:
      case klab::words::Ctx::Cinf: {
        auto g = klab::clifford::c_normal_form(w);
        report["result"] = {{"kind", "clifford"},
                            {"form", klab::io::to_json(g)}};
        human = "b=" + std::to_string(g.b) + ", " +
                std::to_string(g.indices.size()) + " generators";
        break;
      }
      case klab::words::Ctx::K0: {
        auto g = klab::kgroup::k0_normal_form(w);
        report["result"] = {{"kind", "k0"}, {"form", klab::io::to_json(g)}};
        human = "a=" + g.a.str() + ", b=" + std::to_string(g.b) + ", " +
                std::to_string(g.indices.size()) + " generators";
        break;
      }
      case klab::words::Ctx::K: {
        auto [f, tr] = klab::kgroup::britton_reduce(
            klab::kgroup::britton_split(klab::words::free_reduce(w)));
        report["result"] = {{"kind", "britton"},
                            {"form", klab::io::to_json(f)}};
        report["instrumentation"] = trace_instrumentation(tr);
        human = std::to_string(f.t_count()) + " stable letters after " +
                std::to_string(tr.pinch_steps) + " pinches";
        break;
      }
    }
    emit(report, out, human);
  });

  // ---- decide ------------------------------------------------------------
  auto* cmd_decide =
      app.add_subcommand("decide", "is the word trivial in the HNN group?");
  cmd_decide->add_option("word", word1, "input word")->required();
  cmd_decide->callback([&] {
    Word w = klab::words::parse_word(word1, klab::words::k_alphabet());
    auto [trivial, tr] = klab::kgroup::is_trivial(w);
    json report = report_skeleton("decide", {{"word", word1}});
    report["result"] = {{"trivial", trivial}};
    report["instrumentation"] = trace_instrumentation(tr);
    emit(report, out,
         "trivial: " + yesno(trivial) + " (" +
             std::to_string(tr.pinch_steps) + " pinches, " +
             std::to_string(tr.micros) + " us)");
  });

  // ---- equal -------------------------------------------------------------
  auto* cmd_equal =
      app.add_subcommand("equal", "do two words name the same element?");
  cmd_equal->add_option("word1", word1, "first word")->required();
  cmd_equal->add_option("word2", word2, "second word")->required();
  cmd_equal->callback([&] {
    auto a = klab::words::k_alphabet();
    bool eq = klab::kgroup::equal(klab::words::parse_word(word1, a),
                                  klab::words::parse_word(word2, a));
    json report =
        report_skeleton("equal", {{"word1", word1}, {"word2", word2}});
    report["result"] = {{"equal", eq}};
    emit(report, out, "equal: " + yesno(eq));
  });

  // ---- mult --------------------------------------------------------------
  auto* cmd_mult = app.add_subcommand(
      "mult", "multiply two words through their normal forms");
  cmd_mult->add_option("word1", word1, "first word")->required();
  cmd_mult->add_option("word2", word2, "second word")->required();
  add_group(cmd_mult);
  cmd_mult->callback([&] {
    auto a = group_from(group, group_n);
    Word u = klab::words::parse_word(word1, a);
    Word v = klab::words::parse_word(word2, a);
    json report = report_skeleton(
        "mult", {{"word1", word1},
                 {"word2", word2},
                 {"group", klab::words::alphabet_name(a)}});
    std::string human;
    if (a.ctx == klab::words::Ctx::Cn || a.ctx == klab::words::Ctx::Cinf) {
      klab::clifford::MergeStats stats;
      auto [g, count] = klab::clifford::c_multiply(
          klab::clifford::c_normal_form(u), klab::clifford::c_normal_form(v),
          &stats);
      report["result"] = {{"kind", "clifford"}, {"form", klab::io::to_json(g)}};
      report["instrumentation"] = {
          {"applications", klab::io::to_json(count)},
          {"comparisons", stats.comparisons}};
      human = std::to_string(count.total()) + " relation applications";
    } else if (a.ctx == klab::words::Ctx::K0) {
      std::uint64_t comparisons = 0;
      auto g = klab::kgroup::k0_multiply(klab::kgroup::k0_normal_form(u),
                                         klab::kgroup::k0_normal_form(v),
                                         &comparisons);
      report["result"] = {{"kind", "k0"}, {"form", klab::io::to_json(g)}};
      report["instrumentation"] = {{"comparisons", comparisons}};
      human = "a=" + g.a.str() + ", b=" + std::to_string(g.b);
    } else {
      throw domain_error(
          "mult works in cn, c, or k0; use decide/equal for the HNN group");
    }
    emit(report, out, human);
  });

  // ---- build-z / build-x --------------------------------------------------
  std::string big_k;
  auto* cmd_bz = app.add_subcommand(
      "build-z", "short word equal to z^k from the binary expansion of k");
  cmd_bz->add_option("k", big_k, "exponent (decimal, >= 0)")->required();
  cmd_bz->callback([&] {
    Int k = parse_big(big_k, "k");
    Word w = klab::kgroup::build_z(k);
    json report = report_skeleton("build-z", {{"k", klab::io::int_json(k)}});
    report["result"] = {{"word", klab::words::render_word(w)},
                        {"length", klab::io::int_json(w.length())}};
    emit(report, out, "length " + w.length().str());
  });
  auto* cmd_bx = app.add_subcommand(
      "build-x", "short word equal to the k-th conjugate generator");
  cmd_bx->add_option("k", big_k, "index (decimal, >= 0)")->required();
  cmd_bx->callback([&] {
    Int k = parse_big(big_k, "k");
    Word w = klab::kgroup::build_x(k);
    json report = report_skeleton("build-x", {{"k", klab::io::int_json(k)}});
    report["result"] = {{"word", klab::words::render_word(w)},
                        {"length", klab::io::int_json(w.length())}};
    emit(report, out, "length " + w.length().str());
  });

  // ---- fuzz ----------------------------------------------------------------
  std::uint64_t fuzz_count = 100;
  std::uint64_t fuzz_size = 12;
  auto* cmd_fuzz = app.add_subcommand(
      "fuzz", "generate trivial/non-trivial words and cross-check decide");
  cmd_fuzz->add_option("--seed", seed, "RNG seed")->required();
  cmd_fuzz->add_option("--count", fuzz_count, "words per class")
      ->capture_default_str();
  cmd_fuzz->add_option("--size", fuzz_size, "witness size scale")
      ->capture_default_str();
  cmd_fuzz->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> lines;
    std::uint64_t disagreements = 0;
    json cases = json::array();
    for (std::uint64_t i = 0; i < fuzz_count; ++i) {
      klab::oracle::RelatorSoupConfig cfg;
      cfg.num_factors = 1 + i % 7;
      cfg.seed = seed * 1000003 + i;
      Word w = klab::oracle::relator_soup(cfg).word;
      bool got = klab::kgroup::is_trivial(w).first;
      if (!got) ++disagreements;
      lines.push_back(klab::words::render_word(w));
      cases.push_back({{"expect", "trivial"}, {"got", got}});
    }
    for (std::uint64_t i = 0; i < fuzz_count; ++i) {
      Word w = klab::oracle::nontrivial_witness(seed * 999983 + i, fuzz_size);
      bool got = klab::kgroup::is_trivial(w).first;
      if (got) ++disagreements;
      lines.push_back(klab::words::render_word(w));
      cases.push_back({{"expect", "nontrivial"}, {"got", got}});
    }
    auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

    json report = report_skeleton(
        "fuzz", {{"count", fuzz_count}, {"size", fuzz_size}});
    report["result"] = {{"words", 2 * fuzz_count},
                        {"disagreements", disagreements},
                        {"cases", std::move(cases)}};
    report["instrumentation"] = {{"micros", micros}};
    report["seed"] = seed;

    if (!out.path.empty()) {
      // Corpus file: header comments, then one word per line.
      std::ofstream f(out.path);
      if (!f) throw domain_error("cannot open output file " + out.path);
      f << "# fuzz corpus: " << fuzz_count << " trivial then " << fuzz_count
        << " non-trivial words\n";
      f << "# seed " << seed << ", size " << fuzz_size << "\n";
      for (const auto& l : lines) f << l << "\n";
      Output stdout_only;
      stdout_only.indent = out.indent;
      emit(report, stdout_only,
           std::to_string(disagreements) + " disagreements");
    } else {
      emit(report, out, std::to_string(disagreements) + " disagreements");
    }
  });

  // ---- rep-exact -----------------------------------------------------------
  int rep_n = 2;
  bool faithful = false;
  auto* cmd_rx = app.add_subcommand(
      "rep-exact", "exact unitary representation of the rank-n group");
  cmd_rx->add_option("--n", rep_n, "rank")->required();
  cmd_rx->add_flag("--faithful", faithful,
                   "use the element-separating variant");
  cmd_rx->add_option("--norm", norm_name, "norm for the defect report")
      ->capture_default_str();
  cmd_rx->callback([&] {
    auto phi = faithful ? klab::rep::faithful_clifford_rep(rep_n)
                        : klab::rep::exact_clifford_rep(rep_n);
    auto kind = klab::mat::NormKind::parse(norm_name);
    double defect = klab::rep::relation_defect(phi, kind);
    json report = report_skeleton(
        "rep-exact",
        {{"n", rep_n}, {"faithful", faithful}, {"norm", kind.name()}});
    report["result"] = {{"d", phi.d}, {"relation_defect", defect}};
    if (phi.d <= 32) {
      json xs = json::array();
      for (const auto& x : phi.xs) xs.push_back(klab::io::to_json(x));
      report["result"]["J"] = klab::io::to_json(phi.J);
      report["result"]["xs"] = std::move(xs);
    } else {
      report["result"]["matrices_omitted"] = true;
    }
    emit(report, out,
         "d=" + std::to_string(phi.d) +
             ", relation defect=" + std::to_string(defect));
  });

  // ---- rep-defect -----------------------------------------------------------
  double magnitude = 0.0;
  auto* cmd_rd = app.add_subcommand(
      "rep-defect", "defects of a perturbed exact representation");
  cmd_rd->add_option("--n", rep_n, "rank (<= 6)")->required();
  cmd_rd->add_option("--magnitude", magnitude, "perturbation size")
      ->required();
  cmd_rd->add_option("--seed", seed, "RNG seed")->required();
  cmd_rd->add_option("--norm", norm_name, "norm")->capture_default_str();
  cmd_rd->callback([&] {
    auto kind = klab::mat::NormKind::parse(norm_name);
    auto phi = klab::rep::perturb(klab::rep::exact_clifford_rep(rep_n),
                                  magnitude, seed);
    double rdef = klab::rep::relation_defect(phi, kind);
    auto psi = klab::rep::lift_to_table(phi);
    double hdef = klab::rep::hom_defect(psi, kind);
    double jdef = klab::rep::j_defect(psi, kind);
    std::uint64_t bound = klab::clifford::count_bound(rep_n);
    json report = report_skeleton("rep-defect", {{"n", rep_n},
                                                 {"magnitude", magnitude},
                                                 {"norm", kind.name()}});
    report["result"] = {{"d", psi.d},
                        {"relation_defect", rdef},
                        {"hom_defect", hdef},
                        {"j_defect", jdef},
                        {"application_bound", bound},
                        {"bounded", hdef <= bound * rdef + 1e-9}};
    report["seed"] = seed;
    emit(report, out,
         "relation defect " + std::to_string(rdef) + ", hom defect " +
             std::to_string(hdef));
  });

  // ---- rep-lift --------------------------------------------------------------
  auto* cmd_rl = app.add_subcommand(
      "rep-lift", "full element table of a perturbed representation");
  cmd_rl->add_option("--n", rep_n, "rank (<= 6)")->required();
  cmd_rl->add_option("--magnitude", magnitude, "perturbation size")
      ->required();
  cmd_rl->add_option("--seed", seed, "RNG seed")->required();
  cmd_rl->callback([&] {
    if (rep_n > 6)
      throw domain_error("rep-lift prints all 2^(n+1) matrices; n <= 6");
    auto psi = klab::rep::lift_to_table(klab::rep::perturb(
        klab::rep::exact_clifford_rep(rep_n), magnitude, seed));
    json report = report_skeleton(
        "rep-lift", {{"n", rep_n}, {"magnitude", magnitude}});
    report["result"] = {{"table", klab::io::to_json(psi)}};
    report["seed"] = seed;
    emit(report, out,
         std::to_string(psi.e.size()) + " elements at dimension " +
             std::to_string(psi.d));
  });

  // ---- rep-fit ----------------------------------------------------------------
  auto* cmd_rf = app.add_subcommand(
      "rep-fit", "fit an exact representation near a perturbed one");
  cmd_rf->add_option("--n", rep_n, "rank (<= 6)")->required();
  cmd_rf->add_option("--magnitude", magnitude, "perturbation size")
      ->required();
  cmd_rf->add_option("--seed", seed, "RNG seed")->required();
  cmd_rf->add_option("--tolerance", tolerance, "Procrustes stop threshold")
      ->capture_default_str();
  cmd_rf->callback([&] {
    auto psi = klab::rep::lift_to_table(klab::rep::perturb(
        klab::rep::exact_clifford_rep(rep_n), magnitude, seed));
    auto fit = klab::rep::fit_exact_rep(psi, tolerance);
    json report = report_skeleton("rep-fit", {{"n", rep_n},
                                              {"magnitude", magnitude},
                                              {"tolerance", tolerance}});
    report["result"] = {{"d", psi.d},
                        {"m", fit.m},
                        {"epsilon", fit.epsilon},
                        {"distance", fit.distance},
                        {"within_42_epsilon",
                         fit.distance <= 42.0 * fit.epsilon + 1e-12},
                        {"U", klab::io::to_json(fit.U)}};
    report["instrumentation"] = {{"iterations", fit.iterations}};
    report["seed"] = seed;
    emit(report, out,
         "m=" + std::to_string(fit.m) + ", distance " +
             std::to_string(fit.distance) + " vs epsilon " +
             std::to_string(fit.epsilon));
  });

  // ---- rep-lemma-check ---------------------------------------------------------
  std::string dim_str = "1", n_str = "1";
  double eps_in = 0.0, deltaj_in = 0.0;
  auto* cmd_lc = app.add_subcommand(
      "rep-lemma-check",
      "minimum-dimension verdict for an approximate representation");
  cmd_lc->add_option("--d", dim_str, "dimension (decimal)")->required();
  cmd_lc->add_option("--rank", n_str, "group rank (decimal)")->required();
  cmd_lc->add_option("--epsilon", eps_in, "homomorphism defect")->required();
  cmd_lc->add_option("--deltaj", deltaj_in, "distance of J from identity")
      ->required();
  cmd_lc->callback([&] {
    Int d = parse_big(dim_str, "--d");
    Int n = parse_big(n_str, "--rank");
    auto v = klab::rep::min_dimension_check(d, n, eps_in, deltaj_in);
    json report = report_skeleton("rep-lemma-check",
                                  {{"d", klab::io::int_json(d)},
                                   {"rank", klab::io::int_json(n)},
                                   {"epsilon", eps_in},
                                   {"deltaj", deltaj_in}});
    report["result"] = klab::io::to_json(v);
    emit(report, out,
         "hypothesis " + yesno(v.hypothesis) + ", consistent " +
             yesno(v.consistent));
  });

  // ---- rep-search -----------------------------------------------------------
  std::size_t search_d = 2;
  std::uint64_t iterations = 1000;
  auto* cmd_rs = app.add_subcommand(
      "rep-search", "search low dimensions for small defect and large deltaJ");
  cmd_rs->add_option("--n", rep_n, "rank (2..8)")->required();
  cmd_rs->add_option("--d", search_d, "dimension to search")->required();
  cmd_rs->add_option("--iterations", iterations, "search steps")
      ->capture_default_str();
  cmd_rs->add_option("--seed", seed, "RNG seed")->required();
  cmd_rs->callback([&] {
    auto r = klab::rep::compressed_rep_search(rep_n, search_d, iterations,
                                              seed);
    json report = report_skeleton(
        "rep-search",
        {{"n", rep_n}, {"d", search_d}, {"iterations", iterations}});
    report["result"] = klab::io::to_json(r);
    report["seed"] = seed;
    emit(report, out,
         "best defect " + std::to_string(r.best_defect) + ", best deltaJ " +
             std::to_string(r.best_deltaJ) + ", consistent " +
             yesno(r.consistent));
  });

  // ---- hlp-bound ------------------------------------------------------------
  klab::rep::HlpParams hlp;
  auto* cmd_hb = app.add_subcommand(
      "hlp-bound", "dimension lower bound from the profile parameters");
  cmd_hb->add_option("--delta", hlp.delta, "target distance")->required();
  cmd_hb->add_option("--epsilon", hlp.epsilon, "defect")->required();
  cmd_hb->add_option("--c4", hlp.C4, "comparison constant")
      ->capture_default_str();
  cmd_hb->add_option("--kappa", hlp.kappa, "profile exponent slack")
      ->required();
  cmd_hb->callback([&] {
    auto r = klab::rep::hlp_lower_bound(hlp);
    json report = report_skeleton("hlp-bound", {{"delta", hlp.delta},
                                                {"epsilon", hlp.epsilon},
                                                {"c4", hlp.C4},
                                                {"kappa", hlp.kappa}});
    report["result"] = klab::io::to_json(r);
    emit(report, out,
         "n=" + r.n.str() + ", log2 d_min=" + std::to_string(r.log2_d_min) +
             ", guarantee " + yesno(r.guarantee));
  });

  // ---- derive-bound -----------------------------------------------------------
  std::uint64_t factors = 4;
  double rel_eps = 1e-3;
  auto* cmd_db = app.add_subcommand(
      "derive-bound",
      "defect bound for a random trivial word from its derivation");
  cmd_db->add_option("--seed", seed, "RNG seed")->required();
  cmd_db->add_option("--factors", factors, "conjugated relators in the word")
      ->capture_default_str();
  cmd_db->add_option("--epsilon", rel_eps, "per-relation defect")
      ->capture_default_str();
  cmd_db->callback([&] {
    klab::oracle::RelatorSoupConfig cfg;
    cfg.num_factors = factors;
    cfg.seed = seed;
    auto soup = klab::oracle::relator_soup(cfg);
    double bound = klab::rep::defect_bound_from_derivation(
        soup.word, soup.derivation, rel_eps);
    json report = report_skeleton(
        "derive-bound", {{"factors", factors}, {"epsilon", rel_eps}});
    report["result"] = {{"word", klab::words::render_word(soup.word)},
                        {"steps", soup.derivation.steps.size()},
                        {"bound", bound}};
    report["seed"] = seed;
    emit(report, out,
         std::to_string(soup.derivation.steps.size()) + " steps, bound " +
             std::to_string(bound));
  });

  // ---- bench -------------------------------------------------------------------
  std::uint64_t min_len = 1000, max_len = 32000, points = 6;
  auto* cmd_bench = app.add_subcommand(
      "bench", "time the decision procedure against input length");
  cmd_bench->add_option("--min-length", min_len, "smallest word length")
      ->capture_default_str();
  cmd_bench->add_option("--max-length", max_len, "largest word length")
      ->capture_default_str();
  cmd_bench->add_option("--points", points, "number of lengths")
      ->capture_default_str();
  cmd_bench->add_option("--seed", seed, "RNG seed")->required();
  cmd_bench->callback([&] {
    if (min_len < 10 || max_len < min_len || points < 2)
      throw domain_error("bench needs 10 <= min-length <= max-length and "
                         ">= 2 points");
    json pts = json::array();
    std::vector<double> logl, logt;
    double ratio = static_cast<double>(max_len) / static_cast<double>(min_len);
    for (std::uint64_t i = 0; i < points; ++i) {
      double frac = points == 1 ? 0.0
                                : static_cast<double>(i) /
                                      static_cast<double>(points - 1);
      auto target = static_cast<std::uint64_t>(
          static_cast<double>(min_len) * std::pow(ratio, frac));
      klab::oracle::RelatorSoupConfig cfg;
      cfg.num_factors = std::max<std::uint64_t>(1, target / 18);
      cfg.max_conjugator_length = 6;
      cfg.seed = seed + i;
      Word w = klab::oracle::relator_soup(cfg).word;
      auto t0 = std::chrono::steady_clock::now();
      auto [trivial, tr] = klab::kgroup::is_trivial(w);
      auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      if (!trivial) throw domain_error("benchmark word must be trivial");
      double len = static_cast<double>(w.length().convert_to<double>());
      pts.push_back({{"length", klab::io::int_json(w.length())},
                     {"micros", micros},
                     {"pinches", tr.pinch_steps}});
      logl.push_back(std::log(std::max(1.0, len)));
      logt.push_back(std::log(static_cast<double>(std::max<std::int64_t>(
          1, micros))));
    }
    // Least-squares slope of log time against log length.
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < logl.size(); ++i) {
      mx += logl[i];
      my += logt[i];
    }
    mx /= static_cast<double>(logl.size());
    my /= static_cast<double>(logl.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < logl.size(); ++i) {
      num += (logl[i] - mx) * (logt[i] - my);
      den += (logl[i] - mx) * (logl[i] - mx);
    }
    double slope = den == 0 ? 0.0 : num / den;
    json report = report_skeleton("bench", {{"min_length", min_len},
                                            {"max_length", max_len},
                                            {"points", points}});
    report["result"] = {{"points", std::move(pts)}, {"slope", slope}};
    report["seed"] = seed;
    emit(report, out, "slope " + std::to_string(slope));
  });

  std::string active_command;
  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    std::cout << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const klab::parse_error& e) {
    json err;
    err["error"] = {{"type", "parse_error"},
                    {"message", e.what()},
                    {"position", e.position()}};
    err["version"] = klab::kVersion;
    std::cout << (out.indent < 0 ? err.dump() : err.dump(out.indent)) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    json err;
    err["error"] = {{"type", "domain_error"}, {"message", e.what()}};
    err["version"] = klab::kVersion;
    std::cout << (out.indent < 0 ? err.dump() : err.dump(out.indent)) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
