#pragma once

#include <cstdint>
#include <stdexcept>

namespace streamds {

using SampleId = int;
using ClassifierId = int;  // 1-based, in [1, M]
using Slot = int;          // 1-based, in [1, T]

inline constexpr int kLabelPos = +1;
inline constexpr int kLabelNeg = -1;

// Binary labels are {+1,-1} internally; dataset class ids {1,2} map onto them.
inline int label_to_class(int label) {
    if (label == kLabelPos) return 1;
    if (label == kLabelNeg) return 2;
    throw std::invalid_argument("label must be +1 or -1");
}

inline int class_to_label(int cls) {
    if (cls == 1) return kLabelPos;
    if (cls == 2) return kLabelNeg;
    throw std::invalid_argument("binary class id must be 1 or 2");
}

}  // namespace streamds
