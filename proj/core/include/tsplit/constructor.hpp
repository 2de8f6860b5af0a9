#ifndef TSPLIT_CONSTRUCTOR_HPP
#define TSPLIT_CONSTRUCTOR_HPP

#include <string>
#include <vector>

#include "tsplit/kernel.hpp"
#include "tsplit/multipoly.hpp"
#include "tsplit/sheaf_map.hpp"
#include "tsplit/splitting.hpp"

namespace tsplit {

enum class ExtensionStrategy { J0, J1, J2 };

std::string strategy_name(ExtensionStrategy s);

// Which J-shape turns the kernel splitting `current` into `target` when one
// O(e) summand is added to the ambient tangent bundle; throws if none does.
ExtensionStrategy select_strategy(const SplittingType& current, const SplittingType& target, int e);

template <class K>
struct ExtensionStep {
  IdealCombination<K> input_F;
  ExtensionStrategy strategy;
  IdealCombination<K> output_F;
  GradedSheafMap<K> K_in;  // kernel of the input delta, ascending twists
  GradedSheafMap<K> J;
  GradedSheafMap<K> N1;
  GradedSheafMap<K> N2;
  GradedSheafMap<K> N;
  GradedSheafMap<K> delta_out;
  BinaryForm<K> g;
  SplittingType target_splitting;
};

template <class K>
ExtensionStep<K> extend_dimension(const IdealCombination<K>& f, const SplittingType& target);

// Predicted splittings at n = e, e+1, ..., n_target along the constructive chain.
std::vector<SplittingType> extension_schedule(int d, int e, int n_target);
std::vector<ExtensionStrategy> extension_strategies(int d, int e, int n_target);

// Strategy the induction arguments use to go from n-1 to n: J0 for quadrics;
// cubics J1 at n = e+1, then J0; quartics J2 at n = e+1, J1 up to 2e+1, then J0.
ExtensionStrategy induction_strategy(int d, int e, int n);

// Example hypersurface whose T_X|_C realizes the catalog splitting.
// Throws PreconditionError outside the constructive range.
// The strategies used by the extension steps are appended to `steps` when given.
template <class K>
IdealCombination<K> generate_example(const CurveContext& ctx, const K& field,
                                     std::vector<ExtensionStrategy>* steps = nullptr);

// F with the quadric columns of psi equal to targets (e-1 forms of degree e(d-1)-2).
template <class K>
IdealCombination<K> lift_psi_targets(const std::vector<BinaryForm<K>>& targets, const CurveContext& ctx,
                                     const K& field);

// Targets s^(D - t_l) t^(t_l) with t_1 = 0 and t_{l+1} - t_l = steps[l-1], D = e(d-1)-2.
template <class K>
std::vector<BinaryForm<K>> ladder_targets(const CurveContext& ctx, const K& field, const std::vector<int>& steps);

// Steps of the general-degree ladder for e = n >= 2d-2: d-1 repeated n-2d+2 times, then d.
std::vector<int> general_ladder_steps(int d, int n);

}  // namespace tsplit

#endif
