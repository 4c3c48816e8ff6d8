// Plain-text and CSV tables shared by the command line and the repro run.
#pragma once

#include <string>
#include <vector>

#include "wnet/cluster.hpp"
#include "wnet/cores.hpp"
#include "wnet/hits.hpp"
#include "wnet/model.hpp"

namespace wnet {

enum class TableFormat { Text, Csv };

/// n, arc count, loops, density with and without loops, weight range, total
/// weight and the missing off-diagonal pairs.
std::string info_report(const Network& net);

/// Columns: index, label, iso2, wod, wid, hub, aut, qh, qa.
std::string hits_table(const Network& net, const HitsResult& res, TableFormat format,
                       bool ansi = false);

/// Rank, short name and core number in ranking order.
std::string core_table(const Network& net, const CoreDecomposition& dec, TableFormat format);

/// The `top` highest levels, one line each: "level: name name ...".
std::string core_levels(const Network& net, const CoreDecomposition& dec, std::size_t top);

std::string blockmodel_table(const Blockmodel& bm, const std::vector<std::string>& names,
                             TableFormat format);

}  // namespace wnet
