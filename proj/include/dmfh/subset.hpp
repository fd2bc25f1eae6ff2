#pragma once

#include <vector>

namespace dmfh {

// Serving RU subset for one UE; ru_ids sorted descending by large-scale
// coefficient (ties: ascending RU id). The ARU is a member of ru_ids.
struct ServingSubset {
  int ue_id = 0;
  std::vector<int> ru_ids;
  int aru_id = -1;
};

enum class SubsetRule { kTopM, kAlphaThreshold };
enum class AruCriterion { kStrongestGain, kClosestToDu };
enum class UeOrderPolicy { kAscendingId, kSeededRandom };

}  // namespace dmfh
