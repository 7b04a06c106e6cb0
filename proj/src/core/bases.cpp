#include "core/bases.hpp"

#include <algorithm>

namespace jps {

int sequence_sign(const std::vector<int>& seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return 0;
            if (seq[i] > seq[j]) sign = -sign;
        }
    return sign;
}

namespace {

FormSlot make_slot(std::vector<int> printed) {
    FormSlot s;
    s.printed = printed;
    s.sorted = printed;
    std::sort(s.sorted.begin(), s.sorted.end());
    s.sign = sequence_sign(printed);
    return s;
}

std::vector<FormSlot> build_chain_slots(int k) {
    switch (k) {
    case 0: return {make_slot({})};
    case 1: return {make_slot({1}), make_slot({2}), make_slot({3}), make_slot({4})};
    case 2:
        return {make_slot({1, 4}), make_slot({1, 2}), make_slot({3, 2}),
                make_slot({3, 4}), make_slot({3, 1}), make_slot({2, 4})};
    case 3:
        return {make_slot({2, 3, 4}), make_slot({3, 1, 4}), make_slot({1, 2, 4}),
                make_slot({2, 1, 3})};
    case 4: return {make_slot({1, 2, 3, 4})};
    default: throw invalid_arg("form degree out of 0..4");
    }
}

std::vector<std::vector<int>> build_tuples(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= 4; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace

const std::vector<FormSlot>& chain_slots(int k) {
    static const std::vector<FormSlot> tables[5] = {
        build_chain_slots(0), build_chain_slots(1), build_chain_slots(2),
        build_chain_slots(3), build_chain_slots(4)};
    if (k < 0 || k > 4) throw invalid_arg("form degree out of 0..4");
    return tables[k];
}

const std::vector<std::vector<int>>& multideriv_tuples(int k) {
    static const std::vector<std::vector<int>> tables[5] = {
        build_tuples(0), build_tuples(1), build_tuples(2), build_tuples(3), build_tuples(4)};
    if (k < 0 || k > 4) throw invalid_arg("multiderivation degree out of 0..4");
    return tables[k];
}

std::size_t multideriv_tuple_index(int k, const std::vector<int>& tuple) {
    const auto& tuples = multideriv_tuples(k);
    for (std::size_t i = 0; i < tuples.size(); ++i)
        if (tuples[i] == tuple) return i;
    throw internal("tuple not found in multiderivation basis");
}

std::size_t chain_slot_of_sorted(int k, const std::vector<int>& sorted) {
    const auto& slots = chain_slots(k);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i].sorted == sorted) return i;
    throw internal("sorted tuple not found in form basis");
}

std::vector<int> complement_tuple(const std::vector<int>& tuple) {
    std::vector<int> out;
    for (int i = 1; i <= 4; ++i)
        if (std::find(tuple.begin(), tuple.end(), i) == tuple.end()) out.push_back(i);
    return out;
}

long tuple_weight(const std::vector<int>& tuple, const WeightVector& w) {
    long s = 0;
    for (int i : tuple) s += w[i - 1];
    return s;
}

} // namespace jps
