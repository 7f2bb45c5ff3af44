// Acceptance gate: every release-blocking property in one binary.  Each
// check prints one [PASS]/[FAIL] line; the exit status is the number of
// failing checks (0 = all green).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "irex/oracle.hpp"
#include "irex/repext.hpp"
#include "irex/reorder.hpp"
#include "irex/selfcheck.hpp"
#include "irex/simrep.hpp"

using namespace irex;
namespace sc = irex::selfcheck;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++failures;
}

void report_check(const char* name, const std::optional<std::string>& failure,
                  const std::string& extra = "") {
  report(name, !failure, failure ? *failure : extra);
}

double time_extend_once_ms(const Graph& g, const PredrawnMap& pre, bool& ok) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto res = extend(g, pre);
  auto t1 = clock::now();
  ok = ok && res.extended;
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  ok = ok && ms < 5000.0;
  return ms;
}

std::vector<int> letters(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - 'a');
  return out;
}

// Criterion 1: recognition agrees with the brute-force oracle on 2,000
// random graphs, n <= 8, edge probability in {0.2, 0.5, 0.8}; under 5 min.
void criterion_recognition() {
  auto t0 = std::chrono::steady_clock::now();
  auto failure = sc::check_recognize(1001, 2000);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0).count();
  if (!failure && secs >= 300.0)
    failure = "agreement held but took " + std::to_string(secs) + " s";
  char buf[64];
  std::snprintf(buf, sizeof buf, "2000 graphs in %.1f s", secs);
  report_check("recognition agrees with oracle", failure, buf);
}

// Criterion 2: PQ-tree orderings equal the brute-force consecutive orderings
// on 500 random instances, plus the eight-element worked example.
void criterion_consecutive() {
  auto failure = sc::check_consecutive(1002, 500);
  report_check("pq-tree orderings equal oracle", failure, "500 instances");

  PQTree t = PQTree::universal(8);
  bool ok = t.reduce(letters("abc")) && t.reduce(letters("de")) &&
            t.reduce(letters("efg"));
  ok = ok && t.admits(letters("abcdefgh")) && t.admits(letters("fgedhacb")) &&
       !t.admits(letters("acdefgbh")) && !t.admits(letters("defhgabc"));
  report("eight-element worked example", ok);
}

// Criterion 3: both reorder algorithms agree with brute force over the
// admitted orderings on 1,000 random (tree, relation) pairs; the worked
// acyclic-but-incompatible relation is rejected.
void criterion_reorder() {
  auto failure = sc::check_reorder(1003, 1000);
  report_check("reorder agrees with oracle", failure, "1000 pairs");

  auto t = PQTree::from_bracket("((a b c) [d e f])");
  bool ok = t.has_value();
  if (ok) {
    std::vector<std::pair<int, int>> rel = {
        {1, 0}, {0, 2}, {2, 3}, {3, 5}, {4, 1}};
    ok = reorder_general(*t, rel) == ReorderStatus::Incompatible;
    PQTree flat = PQTree::universal(6);
    ok = ok && reorder_general(flat, rel) == ReorderStatus::Reordered;
  }
  report("acyclic relation incompatible with tree shape", ok);
}

// Criterion 4: the six-handle configuration yields exactly I1<I2, I2<I3 and
// not I1<I3; handle comparison matches pairwise search on 1,000 families.
void criterion_handles() {
  auto seq = SortedEndpointSequence::from_regions({
      std::make_pair(Extended(Rational(2)), Extended(Rational(5))),   // a
      std::make_pair(Extended(Rational(1)), Extended(Rational(3))),   // b
      std::make_pair(Extended(Rational(6)), Extended(Rational(8))),   // c
      std::make_pair(Extended(Rational(4)), Extended(Rational(7))),   // d
  });
  auto fold = [&](std::vector<int> fam) {
    Handles h;
    for (int e : fam) {
      h.lower = std::min(h.lower, seq.right_pos[e]);
      h.upper = std::max(h.upper, seq.left_pos[e]);
    }
    return h;
  };
  Handles h1 = fold({0}), h2 = fold({1, 2}), h3 = fold({3});
  bool ok = set_precedes(h1, h2) && set_precedes(h2, h3) &&
            !set_precedes(h1, h3) && !set_precedes(h2, h1) &&
            !set_precedes(h3, h2) && !set_precedes(h3, h1);
  report("six-handle configuration", ok);

  auto failure = sc::check_handles(1004, 1000);
  report_check("handle comparison equals pairwise search", failure,
               "1000 families");
}

// Criterion 5: extension agrees with the brute-force oracle on 2,000 random
// instances (n <= 7, <= 3 pre-drawn, integer endpoints in [0,6]); every yes
// is verified with the pre-drawn intervals kept verbatim.  Worked instances:
// the four-vertex blocker is not extendible, the two stars are.
void criterion_extension() {
  auto failure = sc::check_extend(1005, 2000);
  report_check("extension agrees with oracle", failure, "2000 instances");

  Graph blocker = Graph::from_edges(4, {{0, 1}, {1, 2}});
  PredrawnMap pre(4);
  pre[0] = ClosedInterval(Rational(0), Rational(1));
  pre[2] = ClosedInterval(Rational(3), Rational(4));
  pre[3] = ClosedInterval(Rational(3, 2), Rational(5, 2));
  auto res = extend(blocker, pre);
  report("blocker instance is not extendible",
         !res.extended && res.fail == ExtendFail::NotExtendible);

  Graph stars = Graph::from_edges(6, {{0, 2}, {0, 3}, {1, 4}, {1, 5}});
  PredrawnMap centers(6);
  centers[0] = ClosedInterval(Rational(0), Rational(1));
  centers[1] = ClosedInterval(Rational(2), Rational(3));
  auto st = extend(stars, centers);
  bool ok = st.extended && st.rep[0] == *centers[0] && st.rep[1] == *centers[1] &&
            verify_extension(stars, centers, st.rep).ok;
  report("two-star instance extends", ok);
}

// Criterion 6: simultaneous representation agrees with the brute-force
// oracle on 500 random instances (k <= 3 graphs, <= 3 shared vertices,
// <= 6 vertices each); solved instances agree exactly on the shared set.
void criterion_simrep() {
  auto failure = sc::check_simrep(1006, 500);
  report_check("simultaneous representation agrees with oracle", failure,
               "500 instances");
}

// Criterion 7: near-linear scaling. Random interval graphs with m <= 4n and
// one in ten vertices pre-drawn from a known representation; each decade of
// growth may cost at most a factor 15 in wall time, each run under 5 s.
void criterion_scaling() {
  sc::Rng rng(1007);
  bool ok = true;
  int sizes[3] = {1000, 10000, 100000};
  std::vector<sc::IntervalInstance> insts;
  std::vector<PredrawnMap> pres;
  for (int i = 0; i < 3; ++i) {
    insts.push_back(sc::random_interval_graph(rng, sizes[i], 4u * sizes[i]));
    pres.push_back(sc::every_tenth_predrawn(insts[i].rep));
    ok = ok && extend(insts[i].g, pres[i]).extended;  // warmup, untimed
  }
  // Machine load drifts, so time the sizes in interleaved rounds: a ratio of
  // minima taken from the same rounds is not skewed by a slow patch hitting
  // one size but not the other. Runs are deterministic single-threaded work,
  // so noise only adds time and the per-size minimum estimates the true cost.
  double ms[3] = {1e18, 1e18, 1e18};
  for (int round = 0; round < 7; ++round)
    for (int i = 0; i < 3; ++i)
      ms[i] = std::min(ms[i], time_extend_once_ms(insts[i].g, pres[i], ok));
  double r1 = ms[1] / ms[0], r2 = ms[2] / ms[1];
  ok = ok && r1 <= 15.0 && r2 <= 15.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "t(1e3)=%.2fms t(1e4)=%.2fms t(1e5)=%.2fms ratios %.1f, %.1f",
                ms[0], ms[1], ms[2], r1, r2);
  report("near-linear scaling of extension", ok, buf);
}

}  // namespace

int main() {
  // The timing gate runs first, on a fresh heap; the bulk randomized checks
  // below churn the allocator enough to skew it by several percent.
  criterion_scaling();
  criterion_recognition();
  criterion_consecutive();
  criterion_reorder();
  criterion_handles();
  criterion_extension();
  criterion_simrep();
  if (failures == 0)
    std::printf("all acceptance checks passed\n");
  else
    std::printf("%d acceptance check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
