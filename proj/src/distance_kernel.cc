// Copyright 2026 The codeswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "codeswitch/distance_kernel.h"

#include <algorithm>
#include <atomic>
#include <bit>

#include "codeswitch/error.h"

namespace codeswitch {

namespace {

constexpr uint64_t kLetterX[3] = {1, 1, 0};
constexpr uint64_t kLetterZ[3] = {0, 1, 1};

uint64_t pow3(size_t w) {
    uint64_t r = 1;
    for (size_t i = 0; i < w; i++) {
        r *= 3;
    }
    return r;
}

uint64_t low_word(const BitVector &v) {
    return v.words().empty() ? 0 : v.words()[0];
}

/// Lexicographic unranking of a w-subset of {0..n-1}.
void unrank_combination(size_t n, size_t w, uint64_t rank, std::vector<size_t> &out) {
    out.resize(w);
    size_t x = 0;
    for (size_t i = 0; i < w; i++) {
        while (true) {
            uint64_t count = binomial(n - x - 1, w - i - 1);
            if (rank < count) {
                out[i] = x++;
                break;
            }
            rank -= count;
            x++;
        }
    }
}

void next_combination(size_t n, std::vector<size_t> &c) {
    size_t w = c.size();
    size_t i = w;
    while (i-- > 0) {
        if (c[i] < n - w + i) {
            c[i]++;
            for (size_t j = i + 1; j < w; j++) {
                c[j] = c[j - 1] + 1;
            }
            return;
        }
    }
}

}  // namespace

uint64_t binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (size_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return static_cast<uint64_t>(r);
}

LogicalSearch::LogicalSearch(size_t num_qubits, std::span<const PauliOp> checks, std::span<const PauliOp> group)
    : n_(num_qubits) {
    if (n_ > 64 || checks.size() > 64) {
        throw Error(ErrorCode::Unsupported, "exhaustive search is limited to 64 qubits and 64 checks");
    }
    for (auto &table : letter_syndromes_) {
        table.assign(n_, 0);
    }
    for (size_t i = 0; i < checks.size(); i++) {
        const auto &c = checks[i];
        if (c.num_qubits() != n_) {
            throw Error(ErrorCode::LengthMismatch, "check operator has the wrong qubit count");
        }
        for (size_t q = 0; q < n_; q++) {
            bool cx = c.xs().get(q);
            bool cz = c.zs().get(q);
            for (int letter = 0; letter < 3; letter++) {
                // Single-qubit letter (lx, lz) anticommutes with (cx, cz) iff cx*lz + cz*lx = 1.
                if (((cx & kLetterZ[letter]) ^ (cz & kLetterX[letter])) & 1) {
                    letter_syndromes_[letter][q] |= uint64_t{1} << i;
                }
            }
        }
    }
    for (const auto &g : group) {
        if (g.num_qubits() != n_) {
            throw Error(ErrorCode::LengthMismatch, "group operator has the wrong qubit count");
        }
        uint64_t x = low_word(g.xs());
        uint64_t z = low_word(g.zs());
        for (size_t i = 0; i < group_rows_.size(); i++) {
            unsigned p = group_pivots_[i];
            bool bit = p < 64 ? (x >> p) & 1 : (z >> (p - 64)) & 1;
            if (bit) {
                x ^= group_rows_[i].first;
                z ^= group_rows_[i].second;
            }
        }
        if (x) {
            group_pivots_.push_back(static_cast<unsigned>(std::countr_zero(x)));
        } else if (z) {
            group_pivots_.push_back(64 + static_cast<unsigned>(std::countr_zero(z)));
        } else {
            continue;
        }
        group_rows_.emplace_back(x, z);
    }
}

uint64_t LogicalSearch::count_at_weight(size_t weight) const {
    return binomial(n_, weight) * pow3(weight);
}

bool LogicalSearch::in_group(uint64_t x, uint64_t z) const {
    for (size_t i = 0; i < group_rows_.size(); i++) {
        unsigned p = group_pivots_[i];
        bool bit = p < 64 ? (x >> p) & 1 : (z >> (p - 64)) & 1;
        if (bit) {
            x ^= group_rows_[i].first;
            z ^= group_rows_[i].second;
        }
    }
    return x == 0 && z == 0;
}

std::optional<LogicalSearch::Hit> LogicalSearch::scan_ranks(size_t weight, uint64_t begin, uint64_t end) const {
    if (begin >= end || weight == 0) {
        return std::nullopt;
    }
    const uint64_t letter_count = pow3(weight);
    std::vector<size_t> support;
    std::vector<uint8_t> digits(weight);
    unrank_combination(n_, weight, begin, support);
    for (uint64_t rank = begin; rank < end; rank++) {
        if (rank != begin) {
            next_combination(n_, support);
        }
        std::fill(digits.begin(), digits.end(), 0);
        uint64_t syn = 0;
        for (size_t q : support) {
            syn ^= letter_syndromes_[0][q];
        }
        for (uint64_t t = 0; t < letter_count; t++) {
            if (syn == 0) {
                uint64_t x = 0;
                uint64_t z = 0;
                for (size_t j = 0; j < weight; j++) {
                    x |= kLetterX[digits[j]] << support[j];
                    z |= kLetterZ[digits[j]] << support[j];
                }
                if (!in_group(x, z)) {
                    BitVector xs(n_);
                    BitVector zs(n_);
                    if (n_ > 0) {
                        xs.words()[0] = x;
                        zs.words()[0] = z;
                    }
                    return Hit{PauliOp(std::move(xs), std::move(zs)), rank * letter_count + t};
                }
            }
            // Odometer over letters, last position fastest.
            size_t j = weight;
            while (j-- > 0) {
                size_t q = support[j];
                if (digits[j] < 2) {
                    syn ^= letter_syndromes_[digits[j]][q] ^ letter_syndromes_[digits[j] + 1][q];
                    digits[j]++;
                    break;
                }
                syn ^= letter_syndromes_[2][q] ^ letter_syndromes_[0][q];
                digits[j] = 0;
            }
        }
    }
    return std::nullopt;
}

std::optional<LogicalSearch::Hit> LogicalSearch::scan_serial(size_t weight) const {
    return scan_ranks(weight, 0, binomial(n_, weight));
}

std::optional<LogicalSearch::Hit> LogicalSearch::scan_parallel(size_t weight, int threads) const {
    const uint64_t total = binomial(n_, weight);
    if (total == 0 || weight == 0) {
        return std::nullopt;
    }
    threads = std::max(threads, 1);
    const int64_t chunks = static_cast<int64_t>(std::min<uint64_t>(total, static_cast<uint64_t>(threads) * 64));
    auto chunk_begin = [&](int64_t c) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(total) * c) / chunks);
    };
    std::vector<std::optional<Hit>> found(chunks);
    std::atomic<int64_t> best{chunks};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int64_t c = 0; c < chunks; c++) {
        if (c > best.load(std::memory_order_relaxed)) {
            continue;
        }
        auto hit = scan_ranks(weight, chunk_begin(c), chunk_begin(c + 1));
        if (hit) {
            found[c] = std::move(hit);
            int64_t current = best.load();
            while (c < current && !best.compare_exchange_weak(current, c)) {
            }
        }
    }

    int64_t b = best.load();
    if (b < chunks) {
        return found[b];
    }
    return std::nullopt;
}

}  // namespace codeswitch
