#pragma once

#include <utility>
#include <vector>

#include "contact/chart_model.hpp"
#include "contact/linalg.hpp"

namespace contact {

struct FiltrationStep {
  unsigned order = 0;      // a distinct value of the order sequence
  unsigned dimension = 0;  // dim of the span of elements of order >= `order`

  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

struct OrderData {
  std::vector<unsigned> d;              // non-increasing
  RationalMatrix adapted_transform;     // row i combines the members into order d[i]
  std::vector<FiltrationStep> filtration_jumps;
  unsigned corank = 0;
  unsigned truncation = 0;              // truncation the data was computed at

  // Compares the order data itself, not the truncation it was computed at.
  friend bool operator==(const OrderData& a, const OrderData& b) {
    return a.d == b.d && a.adapted_transform == b.adapted_transform &&
           a.filtration_jumps == b.filtration_jumps && a.corank == b.corank;
  }
};

// Order sequence of the restricted system by graded elimination: columns are
// monomials ordered by degree (lexicographically earliest first within a
// degree), rows are the members; each echelon row's order is the degree of
// its pivot column. Throws TruncationInsufficient when some combination of
// members vanishes through the truncation degree.
OrderData order_sequence(const RestrictedSystem& sys);

// Same computation on an explicit member list.
OrderData order_sequence(const std::vector<Jet>& members);

struct TruncationPolicy {
  unsigned initial = 16;
  unsigned maximum = 256;
};

// Restricts and computes the order sequence, doubling the truncation on
// TruncationInsufficient up to policy.maximum. A deficit on an exact
// (polynomial, fully captured) system is reported as Degenerate.
OrderData order_sequence_for_chart(const GraphChart& chart, const TruncationPolicy& policy = {});

unsigned corank(const OrderData& od);
unsigned corank(const std::vector<unsigned>& d);

std::vector<unsigned> reduced_sequence(const OrderData& od);
std::vector<unsigned> reduced_sequence(const std::vector<unsigned>& d);

// The adapted basis: adapted_transform applied to the members.
std::vector<Jet> apply_transform(const RationalMatrix& t, const std::vector<Jet>& members);
std::vector<SparsePoly> apply_transform(const RationalMatrix& t,
                                        const std::vector<SparsePoly>& members);

}  // namespace contact
