#pragma once

#include <cstdint>
#include <vector>

#include "bellforge/embezzle.hpp"
#include "bellforge/game.hpp"
#include "bellforge/io.hpp"

namespace bellforge {

// Exact O(d)-arithmetic engine for the value of the ideal family S_d in the
// composed game. After the embedded shift, the joint state is exactly
// (1/sqrt3)|00> Gamma_d + (sqrt2/sqrt3)|11> gamma'_d, so every part-(b)
// expectation is affine in the overlap x_d and no level-2 component ever
// appears. The engine carries only (n_d, x_d) plus fixed 2x2 measurement
// blocks.
struct PartBForm {
    double constant;  // value at x = 0
    double slope;     // coefficient of x_d
    double at(double x) const { return constant + slope * x; }
};

// Affine form of the part-(b) restricted value in x_d.
PartBForm part_b_form();

double part_b_value_structured(std::int64_t d);

// (1/3) (value of the ideal 3-CHSH strategy on the shipped game
//        + part_b_value_structured(d) + 1).
double emb_value(std::int64_t d);

// omega-hat*: the d -> infinity limit of emb_value.
double emb_limit_value();

// Value of the ideal 3-CHSH strategy on the shipped scoring tensor.
double three_chsh_ideal_value();

// The limit of the correlations induced by S_d, evaluated from the affine
// forms at x = 1 (cross-part entries are d-independent and kept exact).
Correlation limit_correlation();

struct CurveRow {
    std::int64_t d;
    double n_d;
    double x_d;
    double deviation;
    double part_b;
    double emb_value;
    double epsilon;  // omega-hat* - emb_value(d)
};

std::vector<CurveRow> curve_rows(const std::vector<std::int64_t>& ds);

}  // namespace bellforge
