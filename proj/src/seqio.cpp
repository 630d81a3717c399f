#include "genoq/seqio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "genoq/errors.hpp"

namespace genoq::seqio {

namespace {

bool is_base(char c) { return c == 'A' || c == 'C' || c == 'G' || c == 'T'; }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path);
    return in;
}

}  // namespace

DnaSequence DnaSequence::parse(const std::string& text) {
    std::string bases;
    bases.reserve(text.size());
    std::size_t pos = 0;
    for (char raw : text) {
        if (std::isspace(static_cast<unsigned char>(raw))) continue;
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
        if (!is_base(c)) {
            throw validation_error(std::string("invalid base '") + raw +
                                   "' at position " + std::to_string(pos));
        }
        bases += c;
        ++pos;
    }
    if (bases.empty()) throw validation_error("empty DNA sequence");
    return DnaSequence(std::move(bases));
}

std::string base_bits(char base, const std::string& scheme) {
    if (!is_base(base)) {
        throw validation_error(std::string("invalid base '") + base + "'");
    }
    if (scheme == "two-bit") {
        switch (base) {
            case 'A': return "00";
            case 'C': return "01";
            case 'G': return "10";
            default: return "11";
        }
    }
    if (scheme == "high-bit") return base == 'G' || base == 'T' ? "1" : "0";
    if (scheme == "cosine") return base == 'C' || base == 'T' ? "1" : "0";
    throw validation_error("unknown base map scheme: " + scheme);
}

std::vector<std::string> registered_schemes() {
    return {"two-bit", "high-bit", "cosine"};
}

std::vector<PromoterRecord> load_promoter_csv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw validation_error(path + ": empty file");

    const std::vector<std::string> header = split_csv_line(line);
    const std::vector<std::string> required = {"id", "region", "start", "end",
                                               "strand"};
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[trim(header[i])] = i;
    for (const std::string& name : required) {
        if (!col.count(name)) {
            throw validation_error(path + ": missing column '" + name + "'");
        }
    }
    const bool has_seq = col.count("sequence") > 0;

    std::vector<PromoterRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() < header.size()) {
            throw validation_error(path + " row " + std::to_string(lineno) +
                                   ": expected " + std::to_string(header.size()) +
                                   " fields, got " + std::to_string(f.size()));
        }
        auto field = [&](const std::string& name) { return trim(f[col.at(name)]); };

        PromoterRecord rec;
        rec.id = field("id");
        rec.region = field("region");
        try {
            rec.start = std::stoll(field("start"));
        } catch (const std::exception&) {
            throw validation_error(path + " row " + std::to_string(lineno) +
                                   ": column 'start' is not an integer");
        }
        try {
            rec.end = std::stoll(field("end"));
        } catch (const std::exception&) {
            throw validation_error(path + " row " + std::to_string(lineno) +
                                   ": column 'end' is not an integer");
        }
        if (rec.end <= rec.start) {
            throw validation_error(path + " row " + std::to_string(lineno) +
                                   ": column 'end' must exceed 'start'");
        }
        const std::string strand = field("strand");
        if (strand != "+" && strand != "-") {
            throw validation_error(path + " row " + std::to_string(lineno) +
                                   ": column 'strand' must be '+' or '-', got '" +
                                   strand + "'");
        }
        rec.strand = strand[0];
        if (has_seq) {
            const std::string seq = field("sequence");
            if (!seq.empty()) {
                rec.sequence = DnaSequence::parse(seq);
                if (rec.sequence->size() !=
                    static_cast<std::size_t>(rec.end - rec.start)) {
                    throw validation_error(
                        path + " row " + std::to_string(lineno) +
                        ": sequence length does not equal end - start");
                }
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<FastaRecord> load_fasta(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<FastaRecord> records;
    std::map<std::string, bool> seen;
    std::string line;
    std::string id;
    std::string body;
    bool have_record = false;

    auto flush = [&]() {
        if (!have_record) return;
        if (seen.count(id)) {
            throw validation_error(path + ": duplicate FASTA id '" + id + "'");
        }
        seen[id] = true;
        records.push_back({id, DnaSequence::parse(body)});
        body.clear();
    };

    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '>') {
            flush();
            id = trim(t.substr(1));
            // keep only the first token as the id
            const auto sp = id.find_first_of(" \t");
            if (sp != std::string::npos) id = id.substr(0, sp);
            if (id.empty()) throw validation_error(path + ": FASTA header without id");
            have_record = true;
        } else {
            if (!have_record) {
                throw validation_error(path + ": sequence data before first header");
            }
            body += t;
        }
    }
    flush();
    if (records.empty()) throw validation_error(path + ": no FASTA records");
    return records;
}

std::map<std::string, RecordLabel> load_labels_csv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw validation_error(path + ": empty file");
    const std::vector<std::string> header = split_csv_line(line);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[trim(header[i])] = i;
    for (const std::string& name : {"id", "split", "class"}) {
        if (!col.count(name)) {
            throw validation_error(path + ": missing column '" + name + "'");
        }
    }
    std::map<std::string, RecordLabel> labels;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() < header.size()) {
            throw validation_error(path + " row " + std::to_string(lineno) +
                                   ": short row");
        }
        const std::string id = trim(f[col.at("id")]);
        if (labels.count(id)) {
            throw validation_error(path + " row " + std::to_string(lineno) +
                                   ": duplicate id '" + id + "'");
        }
        labels[id] = {trim(f[col.at("split")]), trim(f[col.at("class")])};
    }
    return labels;
}

DatasetStats dataset_stats(const std::vector<PromoterRecord>& records,
                           const std::map<std::string, RecordLabel>& labels) {
    DatasetStats stats;
    bool any_sequence = false;
    for (const PromoterRecord& rec : records) {
        const auto it = labels.find(rec.id);
        if (it == labels.end()) {
            throw validation_error("no label for record id '" + rec.id + "'");
        }
        ++stats.counts[it->second.split][it->second.cls];
        const std::uint64_t len =
            rec.sequence ? rec.sequence->size()
                         : static_cast<std::uint64_t>(rec.end - rec.start);
        if (rec.sequence) any_sequence = true;
        ++stats.length_histogram[len];
        ++stats.total;
    }
    stats.length_source = any_sequence ? "sequences" : "coordinates";
    return stats;
}

std::string stats_to_json(const DatasetStats& stats) {
    std::ostringstream os;
    os << "{\"total\": " << stats.total << ", \"length_source\": \""
       << stats.length_source << "\", \"counts\": {";
    bool first_split = true;
    for (const auto& [split, classes] : stats.counts) {
        if (!first_split) os << ", ";
        first_split = false;
        os << '"' << split << "\": {";
        bool first_cls = true;
        for (const auto& [cls, n] : classes) {
            if (!first_cls) os << ", ";
            first_cls = false;
            os << '"' << cls << "\": " << n;
        }
        os << '}';
    }
    os << "}, \"length_histogram\": {";
    bool first_len = true;
    for (const auto& [len, n] : stats.length_histogram) {
        if (!first_len) os << ", ";
        first_len = false;
        os << '"' << len << "\": " << n;
    }
    os << "}}\n";
    return os.str();
}

std::string stats_to_csv(const DatasetStats& stats) {
    std::ostringstream os;
    os << "split,class,count\n";
    for (const auto& [split, classes] : stats.counts) {
        for (const auto& [cls, n] : classes) {
            os << split << ',' << cls << ',' << n << '\n';
        }
    }
    return os.str();
}

}  // namespace genoq::seqio
