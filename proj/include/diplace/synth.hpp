#pragma once

// Digraph placement witnesses for short game values.

#include <stdexcept>
#include <string>
#include <vector>

#include "diplace/digraph.hpp"
#include "diplace/dyadic.hpp"
#include "diplace/game.hpp"

namespace diplace {

class GadgetMismatch : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SynthesisFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n<G1..Gk | H1..Ht>: the option sub-digraphs, a blue b_i per Left option
/// whose deletion leaves exactly G_i, a red r_j per Right option, and n blue
/// x's plus n red y's that give Left an option to -1 and Right one to 1.
struct GadgetPlan {
    unsigned n = 1;
    std::vector<DigraphGame> lefts;
    std::vector<DigraphGame> rights;
};

/// Vertex order: G_1..G_k, H_1..H_t, b_1..b_k, r_1..r_t, x_1..x_n, y_1..y_n.
/// Sub-digraph labels are prefixed "L<i>/" and "R<j>/".
DigraphGame gadget(const GadgetPlan& plan);

/// 2n + k + t + total sub-digraph order.
std::size_t gadget_order(const GadgetPlan& plan);

/// Evaluates gadget(plan) and checks it against
/// canonical({-1, G_1..G_k | 1, H_1..H_t}). Throws GadgetMismatch.
Game gadget_value_check(const GadgetPlan& plan);

/// Sign expansion of x, '+' for Left.
std::string sign_expansion(const Dyadic& x);

/// Chain v1..vs over the sign expansion with arcs vi -> vj for i < j.
DigraphGame stalk(const Dyadic& x);

/// n levels of blue/red edge pairs; each level points at every higher level.
DigraphGame nimber_digraph(unsigned n);

enum class SynthesisRule { Integer, Stalk, Gadget, Translate, Negate };
const char* to_string(SynthesisRule rule);

struct SynthesisStep {
    unsigned depth;
    Game target;
    SynthesisRule rule;
    std::size_t order;  // vertices of the witness built at this step
};

struct SynthesisResult {
    DigraphGame digraph;
    std::vector<SynthesisStep> trace;  // post-order
};

/// A digraph whose value is canonical(x). Throws SynthesisFailure.
SynthesisResult synthesize_traced(Game x);
DigraphGame synthesize(Game x);

}  // namespace diplace
