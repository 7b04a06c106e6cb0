#pragma once

#include <vector>

#include "core/error.hpp"
#include "core/weights.hpp"

namespace jps {

// Slot bookkeeping for the fixed form bases and for multiderivation
// components (strictly increasing index tuples).

struct FormSlot {
    std::vector<int> printed; // index sequence as written in the basis 2-/3-form
    std::vector<int> sorted;  // the same indices, increasing
    int sign;                 // printed form = sign * sorted form
};

const std::vector<FormSlot>& chain_slots(int k);

// increasing k-tuples of {1..4} in lexicographic order
const std::vector<std::vector<int>>& multideriv_tuples(int k);

// position of an increasing tuple within multideriv_tuples(k)
std::size_t multideriv_tuple_index(int k, const std::vector<int>& tuple);

// position of a sorted tuple within chain_slots(k)
std::size_t chain_slot_of_sorted(int k, const std::vector<int>& sorted);

std::vector<int> complement_tuple(const std::vector<int>& tuple);

// parity of the sequence as a permutation of (1,2,3,4) restricted to its
// support; 0 if an index repeats
int sequence_sign(const std::vector<int>& seq);

// sum of the weights over a tuple
long tuple_weight(const std::vector<int>& tuple, const WeightVector& w);

} // namespace jps
