#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmix/aggregator.hpp"

namespace gmix::cli {

/// Builds an operator from its registry name:
///
///   min max arith prod median|med h cowa
///   wavg owa                    fixed weights from `weights`
///   mixture:power:p=2           mixture with w(t) = t^p
///   gm:<family>[:k=v...]        GM over a gallery family
///   bgm:<family>[:k=v...]       BGM over a gallery family
///   mode truncdiff lehmer[:lambda=0.5] stepa stepb
///
/// Family keys are alpha, r and w; vector values use '/' between components,
/// e.g. bgm:direction_bounded:r=0.5/1. Without an explicit arity the natural
/// one is used (see natural_arity). Throws ParseError for unknown names.
AggregatorSpec make_operator(std::string_view spec, std::optional<std::size_t> arity,
                             const std::vector<double>& weights = {});

/// Arity implied by the spec or the weights, or `fallback` when nothing
/// pins it down.
std::size_t natural_arity(std::string_view spec, const std::vector<double>& weights,
                          std::size_t fallback = 3);

/// Top-level registry names, for help output.
std::vector<std::string> registry_names();

}  // namespace gmix::cli
