#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace genoq::seqio {

/// Validated DNA sequence over {A, C, G, T}; never empty.
class DnaSequence {
public:
    static DnaSequence parse(const std::string& text);

    const std::string& str() const { return bases_; }
    std::size_t size() const { return bases_.size(); }
    char operator[](std::size_t i) const { return bases_[i]; }
    auto begin() const { return bases_.begin(); }
    auto end() const { return bases_.end(); }

    bool operator==(const DnaSequence&) const = default;

private:
    explicit DnaSequence(std::string bases) : bases_(std::move(bases)) {}
    std::string bases_;
};

/// Registered base->bit maps:
///   "two-bit":  A=00 C=01 G=10 T=11
///   "high-bit": A=0  C=0  G=1  T=1
///   "cosine":   A=0  G=0  C=1  T=1
std::string base_bits(char base, const std::string& scheme);
std::vector<std::string> registered_schemes();

struct PromoterRecord {
    std::string id;
    std::string region;
    std::int64_t start = 0;
    std::int64_t end = 0;
    char strand = '+';
    std::optional<DnaSequence> sequence;
};

/// CSV with header id,region,start,end,strand[,sequence]. Errors carry the
/// offending line number and column name.
std::vector<PromoterRecord> load_promoter_csv(const std::string& path);

struct FastaRecord {
    std::string id;
    DnaSequence sequence;
};

/// '>'-headers, wrapped sequence lines allowed, duplicate ids rejected.
std::vector<FastaRecord> load_fasta(const std::string& path);

struct RecordLabel {
    std::string split;
    std::string cls;
};

/// id,split,class rows keyed by id.
std::map<std::string, RecordLabel> load_labels_csv(const std::string& path);

struct DatasetStats {
    // split -> class -> count
    std::map<std::string, std::map<std::string, std::uint64_t>> counts;
    std::map<std::uint64_t, std::uint64_t> length_histogram;
    std::uint64_t total = 0;
    // "sequences" when any record carried one, else "coordinates"
    std::string length_source;
};

DatasetStats dataset_stats(const std::vector<PromoterRecord>& records,
                           const std::map<std::string, RecordLabel>& labels);

std::string stats_to_json(const DatasetStats& stats);
std::string stats_to_csv(const DatasetStats& stats);  // split,class,count rows

}  // namespace genoq::seqio
