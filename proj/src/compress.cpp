#include "genoq/compress.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <sstream>

#include "genoq/emit.hpp"
#include "genoq/errors.hpp"
#include "json.hpp"

namespace genoq::compress {

namespace {

struct TreeNode {
    int left = -1;   // -1 marks a leaf
    int right = -1;
    char base = 0;
    std::uint64_t weight = 0;
    char least_leaf = 0;  // alphabetically least base underneath
};

std::map<char, std::uint64_t> base_counts(const seqio::DnaSequence& seq) {
    std::map<char, std::uint64_t> counts;
    for (char b : seq) ++counts[b];
    return counts;
}

void assign_codes(const std::vector<TreeNode>& nodes, int node,
                  const std::string& prefix, std::map<char, std::string>& out) {
    const TreeNode& t = nodes[node];
    if (t.left < 0) {
        out[t.base] = prefix.empty() ? "0" : prefix;  // single-symbol tree
        return;
    }
    assign_codes(nodes, t.left, prefix + "0", out);
    assign_codes(nodes, t.right, prefix + "1", out);
}

HuffmanCodebook finish_codebook(const std::vector<TreeNode>& nodes, int root,
                                const std::map<char, std::uint64_t>& counts,
                                std::string variant) {
    HuffmanCodebook book;
    book.counts = counts;
    book.variant = std::move(variant);
    assign_codes(nodes, root, "", book.code);
    for (const auto& [base, count] : counts) {
        book.total_bits += count * book.code.at(base).size();
    }
    return book;
}

}  // namespace

QuantHuffResult quanthuff(const seqio::DnaSequence& seq, int max_qubits) {
    const std::map<char, std::uint64_t> counts = base_counts(seq);

    // Leaves ranked by ascending count, ties alphabetical (map order).
    std::vector<std::pair<std::uint64_t, char>> ranked;
    for (const auto& [base, count] : counts) ranked.push_back({count, base});
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<TreeNode> nodes;
    std::vector<int> level;
    for (const auto& [count, base] : ranked) {
        nodes.push_back({-1, -1, base, count, base});
        level.push_back(static_cast<int>(nodes.size()) - 1);
    }

    // Pair adjacent nodes left to right; an odd trailing node carries up.
    while (level.size() > 1) {
        std::vector<int> next;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            const int l = level[i];
            const int r = level[i + 1];
            nodes.push_back({l, r, 0, nodes[l].weight + nodes[r].weight,
                             std::min(nodes[l].least_leaf, nodes[r].least_leaf)});
            next.push_back(static_cast<int>(nodes.size()) - 1);
        }
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }

    QuantHuffResult result;
    result.codebook = finish_codebook(nodes, level[0], counts, "cascade");

    // One qubit per code bit across the whole sequence.
    const std::uint64_t n_bits = result.codebook.total_bits;
    if (n_bits <= static_cast<std::uint64_t>(max_qubits)) {
        std::uint64_t index = 0;
        for (char b : seq) {
            for (char bit : result.codebook.code.at(b)) {
                index = index << 1 | (bit == '1' ? 1u : 0u);
            }
        }
        result.state = qsim::basis_state(static_cast<int>(n_bits), index, max_qubits);
    }
    return result;
}

HuffmanCodebook classic_huffman(const seqio::DnaSequence& seq) {
    const std::map<char, std::uint64_t> counts = base_counts(seq);

    std::vector<TreeNode> nodes;
    auto cmp = [&nodes](int a, int b) {
        if (nodes[a].weight != nodes[b].weight) {
            return nodes[a].weight > nodes[b].weight;  // min-heap
        }
        return nodes[a].least_leaf > nodes[b].least_leaf;
    };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> heap(cmp);
    for (const auto& [base, count] : counts) {
        nodes.push_back({-1, -1, base, count, base});
        heap.push(static_cast<int>(nodes.size()) - 1);
    }
    while (heap.size() > 1) {
        const int l = heap.top();
        heap.pop();
        const int r = heap.top();
        heap.pop();
        nodes.push_back({l, r, 0, nodes[l].weight + nodes[r].weight,
                         std::min(nodes[l].least_leaf, nodes[r].least_leaf)});
        heap.push(static_cast<int>(nodes.size()) - 1);
    }
    return finish_codebook(nodes, heap.top(), counts, "classic");
}

BwtResult bwt(const seqio::DnaSequence& seq) {
    std::string s = seq.str();
    s += '$';  // '$' sorts before A/C/G/T in ASCII
    const std::size_t len = s.size();

    std::vector<std::uint32_t> rot(len);
    std::iota(rot.begin(), rot.end(), 0u);
    std::sort(rot.begin(), rot.end(), [&s, len](std::uint32_t a, std::uint32_t b) {
        for (std::size_t k = 0; k < len; ++k) {
            const char ca = s[(a + k) % len];
            const char cb = s[(b + k) % len];
            if (ca != cb) return ca < cb;
        }
        return false;  // unreachable: the sentinel makes rotations distinct
    });

    BwtResult result;
    result.transformed.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        result.transformed[i] = s[(rot[i] + len - 1) % len];
        if (rot[i] == 0) result.primary_index = i;
    }
    return result;
}

seqio::DnaSequence ibwt(const BwtResult& result) {
    const std::string& last = result.transformed;
    const std::size_t len = last.size();
    std::size_t sentinel_row = len;
    for (std::size_t i = 0; i < len; ++i) {
        const char c = last[i];
        if (c == '$') {
            if (sentinel_row != len) {
                throw validation_error("BWT input has more than one sentinel '$'");
            }
            sentinel_row = i;
        } else if (c != 'A' && c != 'C' && c != 'G' && c != 'T') {
            throw validation_error(std::string("invalid BWT character '") + c + "'");
        }
    }
    if (sentinel_row == len) {
        throw validation_error("BWT input is missing the sentinel '$'");
    }
    if (result.primary_index != sentinel_row) {
        throw validation_error("BWT primary index inconsistent with sentinel row");
    }

    // LF mapping: first-column offsets plus the running rank in the last column.
    std::map<char, std::size_t> tally;
    std::vector<std::size_t> rank(len);
    for (std::size_t i = 0; i < len; ++i) rank[i] = tally[last[i]]++;
    std::map<char, std::size_t> first_offset;
    std::size_t acc = 0;
    for (const auto& [c, n] : tally) {  // '$' < 'A' < 'C' < 'G' < 'T' in ASCII
        first_offset[c] = acc;
        acc += n;
    }

    std::string rebuilt(len, 0);
    std::size_t row = result.primary_index;
    for (std::size_t k = 0; k < len; ++k) {
        rebuilt[len - 1 - k] = last[row];
        row = first_offset[last[row]] + rank[row];
    }
    if (rebuilt.back() != '$') {
        throw validation_error("BWT input does not invert to a sentinel-terminated string");
    }
    rebuilt.pop_back();
    return seqio::DnaSequence::parse(rebuilt);
}

std::string bwt_to_json(const BwtResult& result) {
    std::ostringstream os;
    os << "{\"transformed\": \"" << emit::json_escape(result.transformed)
       << "\", \"primary_index\": " << result.primary_index << "}\n";
    return os.str();
}

BwtResult bwt_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("bad BWT file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("transformed") || !j.contains("primary_index")) {
        throw validation_error("BWT file must carry transformed and primary_index");
    }
    return {j["transformed"].get<std::string>(), j["primary_index"].get<std::uint64_t>()};
}

QbwtResult qbwt_encode(const seqio::DnaSequence& seq, std::uint64_t shots,
                       std::uint64_t seed, int max_qubits) {
    const int n = static_cast<int>(seq.size());
    if (n > max_qubits) {
        throw cap_error("qubit cap exceeded: sequence needs " + std::to_string(n) +
                        " qubits");
    }
    BwtResult transform = bwt(seq);

    std::string stripped;
    stripped.reserve(n);
    for (char c : transform.transformed) {
        if (c != '$') stripped += c;
    }
    std::map<char, std::uint64_t> counts;
    for (char c : stripped) ++counts[c];

    QbwtResult result{std::move(transform), qsim::basis_state(n, 0, max_qubits), {}, 0.0};
    double phase = 0.0;
    for (int i = 0; i < n; ++i) {
        const double frac = static_cast<double>(counts[stripped[i]]) / n;
        const double theta = 2.0 * std::numbers::pi * frac;
        result.state = qsim::apply_gate(
            result.state, qsim::Gate::rotation(qsim::Axis::Y, theta), {i});
        phase += theta;  // the scalar exp(i theta) rides along as global phase
    }
    result.global_phase = std::remainder(phase, 2.0 * std::numbers::pi);
    const qsim::cdouble factor = std::polar(1.0, result.global_phase);
    for (qsim::cdouble& a : result.state.amps()) a *= factor;
    result.counts = qsim::sample_counts(result.state, shots, seed);
    return result;
}

std::string codebook_to_json(const HuffmanCodebook& book) {
    std::ostringstream os;
    os << "{\"variant\": \"" << book.variant << "\", \"codes\": [";
    bool first = true;
    for (const auto& [base, code] : book.code) {
        if (!first) os << ", ";
        first = false;
        const std::uint64_t count = book.counts.at(base);
        os << "{\"base\": \"" << base << "\", \"count\": " << count
           << ", \"code\": \"" << code << "\", \"bits\": " << count * code.size()
           << '}';
    }
    os << "], \"total_bits\": " << book.total_bits << "}\n";
    return os.str();
}

std::string counts_to_json(const std::map<std::string, std::uint64_t>& counts) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [bits, n] : counts) {
        if (!first) os << ", ";
        first = false;
        os << '"' << bits << "\": " << n;
    }
    os << "}\n";
    return os.str();
}

}  // namespace genoq::compress
