// Homotopy classes of based loops in X and Y, the collapse of Y-loops into X,
// the map induced by the inclusion X -> Y, and the topological probes.
//
// pi1(X,p) is free on the classes g_n of the loops once around C_n. A loop in
// Y is homotopic rel p to the loop in X obtained by contracting its alpha
// excursions and its inessential excursions into far circles; the word of
// that X-loop is its class, and distinct reduced words stay distinct in Y.

#pragma once

#include "pi1lab/loops.hpp"
#include "pi1lab/random.hpp"
#include "pi1lab/report.hpp"
#include "pi1lab/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pi1lab {

struct HomotopyClass {
  Word word;
  SpaceKind space_kind = SpaceKind::bouquet_x;

  friend bool operator==(const HomotopyClass&, const HomotopyClass&) = default;
};

std::string to_string(const HomotopyClass& c);

/// Word of a loop in X. Throws std::invalid_argument for a loop in Y.
HomotopyClass classify_X(const Loop& loop);

/// Smallest N >= 2 such that no excursion into C_n with n >= N passes the
/// apex B_n or winds a nonzero number of times.
int choose_N(const Loop& loop);

struct CollapseStep {
  enum class Action { kept, alpha_contraction, arc_contraction };

  Rational t_start;
  Rational t_end;
  ComponentId component;
  Action action;
};

std::string to_string(CollapseStep::Action a);

struct Collapse {
  Loop loop;       // in X
  int threshold;   // choose_N of the input
  std::vector<CollapseStep> steps;
};

/// End map of the deformation retraction: alpha excursions and excursions
/// into C_n, n >= N, become constant stretches at p; the rest is kept.
Collapse collapse_with_certificate(const Loop& loop);
Loop collapse_to_X(const Loop& loop);

/// Class of a loop in Y via its collapse.
HomotopyClass classify_Y(const Loop& loop);
/// Dispatches on the loop's space.
HomotopyClass classify(const Loop& loop);

/// Homomorphism induced by the inclusion j: X -> Y.
HomotopyClass induced_map(const HomotopyClass& c);

struct ProbeOptions {
  std::uint64_t seed = 0;
  int digits = 40;
};

/// f_n -> f uniformly with every f_n essential and f inessential, so the path
/// component of f is not open.
ProbeReport probe_nondiscreteness_Y(const Space& y, int n_max, const Rational& epsilon,
                                    const ProbeOptions& options = {});

/// (1/8) min(1/N^2, min_{2<=n<=N} n w_n), N the largest circle index the loop
/// touches (at least 2). n w_n bounds the short edge B_n D_n from below, the
/// place where the two long edges of C_n are closest away from p.
Rational stability_radius(const Loop& loop);

/// Random loop within sup-distance < bound of `loop`: time jitter, slides of
/// breakpoints along their carrying edges, and short spurs out of p into
/// arbitrary circles. The result is always a valid loop in the same space.
Loop perturb_loop(const Loop& loop, const Rational& bound, Rng& rng);

/// Perturbations below min(magnitude, stability radius) keep the word.
ProbeReport probe_discreteness_X(const Loop& loop, int trials, const Rational& magnitude,
                                 const ProbeOptions& options = {});

bool within_ball(const Loop& loop, const Rational& radius);

/// Random loop in Y with every breakpoint within `radius` of p.
Loop sample_small_loop(const Space& y, const Rational& radius, Rng& rng);

struct SmallLoopCheck {
  bool in_ball = false;
  std::optional<HomotopyClass> homotopy_class;  // set only when in_ball
};

SmallLoopCheck check_small_loop(const Loop& loop, const Rational& radius);

/// Every sampled loop inside the ball of `radius` about p is trivial in Y.
ProbeReport probe_slsc_Y(const Space& y, const Rational& radius, int samples,
                         const ProbeOptions& options = {});

/// Semilocal simple connectivity together with non-discreteness.
ProbeReport slsc_nondiscrete_report(const ProbeReport& slsc, const ProbeReport& nondiscreteness);

/// Round trips through j: classify_Y(j(realize_word(w))) = w for random
/// reduced words, also after decorating the loops with alpha excursions and
/// inessential far-circle spurs.
ProbeReport probe_isomorphism(const Space& y, int words, int max_length, int max_generator,
                              const ProbeOptions& options = {});

/// Loop p -> lambda * V -> p along the edge from p to vertex V of `edge`.
Loop spur_loop(const EdgeRef& edge, const Rational& lambda, const Space& space);

/// Copy of the loop interleaved with random alpha excursions and far spurs beyond
/// `max_generator`, in the compact space of the loop's family.
Loop decorate(const Loop& loop, int max_generator, Rng& rng);

}  // namespace pi1lab
