#pragma once

#include <random>
#include <vector>

#include "sigmainv/word.hpp"

namespace testing_helpers {

inline sigmainv::Word random_word(std::mt19937_64& rng, unsigned d, unsigned max_len) {
    std::uniform_int_distribution<unsigned> len(1, max_len), idx(1, d), flip(0, 1);
    std::vector<sigmainv::Letter> letters(len(rng));
    for (auto& l : letters) l = {idx(rng), flip(rng) == 1};
    return sigmainv::Word(letters);
}

}  // namespace testing_helpers
