#pragma once

#include "clusel/core/dataset.hpp"
#include "clusel/indices/score.hpp"

namespace clusel::indices {

// Only the classical member of the Dunn family is provided; the enums leave
// room for other inter/intra definitions.
enum class DunnInter { SingleLinkage };
enum class DunnIntra { Diameter };

/// min over cluster pairs of inter-cluster distance, divided by the largest
/// cluster diameter. Undefined for fewer than two clusters; throws
/// DegenerateDiameter when every cluster has diameter 0.
IndexScore dunn(const DistanceMatrix& dist, const Partition& part,
                DunnInter inter = DunnInter::SingleLinkage,
                DunnIntra intra = DunnIntra::Diameter);

IndexScore dunn(const Dataset& data, const Partition& part);

}  // namespace clusel::indices
