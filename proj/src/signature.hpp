#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sepdfa/automata.hpp"

namespace sepdfa::detail {

// status followed by one successor per letter (kNoState when absent). Two
// registered states are equivalent iff their signatures are equal.
using Signature = std::vector<StateId>;

struct SignatureHash {
  std::size_t operator()(const Signature& sig) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (StateId x : sig) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

using Register = std::unordered_map<Signature, StateId, SignatureHash>;

inline Signature signature_of(Status status, std::span<const StateId> successors) {
  Signature sig;
  sig.reserve(successors.size() + 1);
  sig.push_back(static_cast<StateId>(status));
  sig.insert(sig.end(), successors.begin(), successors.end());
  return sig;
}

}  // namespace sepdfa::detail
