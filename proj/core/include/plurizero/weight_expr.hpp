#ifndef PLURIZERO_WEIGHT_EXPR_HPP
#define PLURIZERO_WEIGHT_EXPR_HPP

#include <memory>
#include <string>

#include "plurizero/polynomial.hpp"

namespace plurizero {

/// Continuous weight q on K, given by a small polynomial expression in the
/// real quantities r2 = ||z||^2 and the coordinate parts re1, im1 (plus
/// re2, im2 when m = 2). m = 1 accepts the aliases re, im.
///
/// Grammar: sums/differences of products of powers, e.g. "0.5*r2 - 0.1*re1^2".
class Weight {
  public:
    /// The zero weight (unweighted case).
    Weight();
    static Weight parse(const std::string& expression, int num_vars);

    double operator()(const Point& z) const;
    bool is_zero() const { return zero_; }
    const std::string& expression() const { return text_; }

    struct Node;  // expression tree; public for the parser implementation

  private:
    std::shared_ptr<const Node> root_;
    std::string text_ = "0";
    bool zero_ = true;
};

}  // namespace plurizero

#endif
