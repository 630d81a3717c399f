// genoq: classical-to-quantum DNA sequence encoding toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation
// error, 3 qubit cap exceeded.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genoq/baseline.hpp"
#include "genoq/compress.hpp"
#include "genoq/emit.hpp"
#include "genoq/entropy_enc.hpp"
#include "genoq/errors.hpp"
#include "genoq/infomath.hpp"
#include "genoq/qoltz.hpp"
#include "genoq/qsim.hpp"
#include "genoq/seqio.hpp"
#include "genoq/spectral.hpp"
#include "genoq/verify.hpp"

namespace {

using namespace genoq;

constexpr std::size_t kLiteralLimit = 1ull << 20;  // 1 MiB

struct GlobalOpts {
    std::uint64_t seed = 0;
    int max_qubits = qsim::kDefaultMaxQubits;
    std::string out;
    std::string format = "json";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write file: " + path);
    out << content;
}

// Inputs are literal text or @path indirection; large payloads must come
// through files.
std::string resolve_input(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return read_file(arg.substr(1));
    if (arg.size() > kLiteralLimit) {
        throw validation_error("literal input exceeds 1 MiB; pass @file instead");
    }
    return arg;
}

seqio::DnaSequence resolve_seq(const std::string& arg) {
    return seqio::DnaSequence::parse(resolve_input(arg));
}

std::string sidecar(const std::string& out, const std::string& suffix) {
    std::filesystem::path p(out);
    p.replace_extension();
    return p.string() + "." + suffix;
}

void emit_result(const GlobalOpts& g, const std::string& content,
                 const std::string& default_name) {
    if (!g.out.empty()) {
        write_file(g.out, content);
    } else if (!default_name.empty()) {
        write_file(default_name, content);
        std::cout << "wrote " << default_name << "\n";
    } else {
        std::cout << content;
    }
}

struct EncodeOpts {
    std::string scheme;
    std::string input;
    std::string ref;
    std::string vec;
    std::string image;
    std::string metric = "fisher-rao";
    double alpha = 1.0;
    double smooth = 0.0;  // 0 disables
    std::uint64_t shots = 1024;
    int reps = 2;
    int k = 2;
    bool entangle = false;
};

std::optional<double> smoothing_of(const EncodeOpts& e) {
    if (e.smooth == 0.0) return std::nullopt;
    if (e.smooth < 0.0) throw validation_error("--smooth must be positive");
    return e.smooth;
}

int run_encode(const GlobalOpts& g, const EncodeOpts& e) {
    const std::string out = g.out.empty() ? "state.json" : g.out;
    std::optional<qsim::Statevector> state;
    std::string report;
    std::string report_name = "report.json";

    auto need_input = [&e]() {
        if (e.input.empty()) throw validation_error("missing --input");
        return resolve_seq(e.input);
    };
    auto need_ref = [&e]() {
        if (e.ref.empty()) {
            throw validation_error("missing --ref (scheme '" + e.scheme +
                                   "' compares against a reference sequence)");
        }
        return resolve_seq(e.ref);
    };

    if (e.scheme == "amplitude") {
        if (!e.vec.empty()) {
            std::vector<double> values;
            std::stringstream ss(resolve_input(e.vec));
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    values.push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw validation_error("bad --vec entry '" + tok + "'");
                }
            }
            state = baseline::amplitude_encode(values, g.max_qubits);
        } else {
            state = baseline::amplitude_encode_sequence(need_input(), g.max_qubits);
        }
    } else if (e.scheme == "pauli") {
        const seqio::DnaSequence seq = need_input();
        baseline::PauliMapConfig config;
        config.angles = baseline::feature_map_angles(seq);
        config.n_qubits = static_cast<int>(config.angles.size());
        config.k = e.k;
        config.reps = e.reps;
        state = baseline::pauli_feature_map(config, g.max_qubits);
    } else if (e.scheme == "angle") {
        state = baseline::angle_embed(need_input(), e.entangle, g.max_qubits);
    } else if (e.scheme == "huffman") {
        const compress::QuantHuffResult r = compress::quanthuff(need_input(), g.max_qubits);
        report = compress::codebook_to_json(r.codebook);
        if (r.state) {
            state = r.state;
        } else {
            write_file(sidecar(out, report_name), report);
            std::cout << "codebook only: " << r.codebook.total_bits
                      << " qubits exceed the cap of " << g.max_qubits << "\n"
                      << "wrote " << sidecar(out, report_name) << "\n";
            return 0;
        }
    } else if (e.scheme == "qbwt") {
        const compress::QbwtResult r =
            compress::qbwt_encode(need_input(), e.shots, g.seed, g.max_qubits);
        state = r.state;
        std::ostringstream os;
        os << "{\"transformed\": \"" << emit::json_escape(r.transform.transformed)
           << "\", \"primary_index\": " << r.transform.primary_index
           << ", \"global_phase\": " << emit::fmt_double(r.global_phase) << "}\n";
        report = os.str();
        write_file(sidecar(out, "counts.json"), compress::counts_to_json(r.counts));
    } else if (e.scheme == "cosine") {
        if (!e.image.empty()) {
            const spectral::GrayImage img = spectral::load_pgm(e.image);
            state = spectral::cosine_encode_image(img, g.max_qubits);
            write_file(sidecar(out, "coeffs.csv"),
                       spectral::coeffs_to_csv(spectral::dct2d(img)));
        } else {
            state = spectral::cosine_encode_dna(need_input(), g.max_qubits);
        }
    } else if (e.scheme == "sencode") {
        const entenc::SEncodeResult r = entenc::sencode(need_input(), g.max_qubits);
        state = r.state;
        report = entenc::segment_report_to_json(r.report);
    } else if (e.scheme == "nz22") {
        const seqio::DnaSequence seq = need_input();
        const entenc::Nz22Result r =
            entenc::nz22(seq, need_ref(), e.alpha, smoothing_of(e), g.max_qubits);
        state = r.state;
        report = entenc::budget_to_json(r.budget);
    } else if (e.scheme == "nz23") {
        const seqio::DnaSequence seq = need_input();
        const entenc::Nz23Result r =
            entenc::nz23(seq, need_ref(), e.alpha, g.max_qubits);
        state = r.state;
        report = entenc::budget_to_json(r.budget);
    } else if (e.scheme == "quantig") {
        const seqio::DnaSequence seq = need_input();
        state = entenc::quantig(seq, need_ref(),
                                entenc::ig_metric_from_name(e.metric),
                                smoothing_of(e));
    } else {
        throw validation_error("unknown scheme '" + e.scheme + "'");
    }

    write_file(out, qsim::state_to_json(*state));
    std::cout << "wrote " << out << " (" << state->n_qubits() << " qubits)\n";
    if (!report.empty()) {
        write_file(sidecar(out, report_name), report);
        std::cout << "wrote " << sidecar(out, report_name) << "\n";
    }
    return 0;
}

int run_sample(const GlobalOpts& g, const std::string& state_path,
               std::uint64_t shots) {
    const qsim::Statevector state =
        qsim::state_from_json(read_file(state_path), qsim::kHardMaxQubits);
    if (std::abs(state.norm_sq() - 1.0) > 1e-6) {
        throw validation_error("state file is not normalized (|norm^2 - 1| > 1e-6)");
    }
    const auto counts = qsim::sample_counts(state, shots, g.seed);
    emit_result(g, compress::counts_to_json(counts), "counts.json");
    return 0;
}

int run_huffman(const GlobalOpts& g, const std::string& input, bool classic) {
    const seqio::DnaSequence seq = resolve_seq(input);
    const compress::HuffmanCodebook book =
        classic ? compress::classic_huffman(seq) : compress::quanthuff(seq, 0).codebook;
    emit_result(g, compress::codebook_to_json(book), "");
    return 0;
}

int run_bwt(const GlobalOpts& g, const std::string& input) {
    emit_result(g, compress::bwt_to_json(compress::bwt(resolve_seq(input))), "");
    return 0;
}

int run_ibwt(const GlobalOpts& g, const std::string& input) {
    const std::string text = resolve_input(input);
    const compress::BwtResult r = compress::bwt_from_json(text);
    emit_result(g, compress::ibwt(r).str() + "\n", "");
    return 0;
}

int run_entropy(const GlobalOpts& g, const std::string& input) {
    const info::ProbDist4 p = info::base_distribution(resolve_seq(input));
    std::ostringstream os;
    os << "{\"distribution\": {";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i > 0) os << ", ";
        os << '"' << info::kBases[i] << "\": " << emit::fmt_double(p[i]);
    }
    os << "}, \"entropy_bits\": " << emit::fmt_double(info::shannon_entropy(p))
       << "}\n";
    emit_result(g, os.str(), "");
    return 0;
}

int run_divergence(const GlobalOpts& g, const std::string& kind,
                   const std::string& input, const std::string& ref,
                   double smooth) {
    const info::ProbDist4 p = info::base_distribution(resolve_seq(input));
    const info::ProbDist4 q = info::base_distribution(resolve_seq(ref));
    std::optional<double> smoothing;
    if (smooth != 0.0) {
        if (smooth < 0.0) throw validation_error("--smooth must be positive");
        smoothing = smooth;
    }
    double value = 0.0;
    if (kind == "kl") {
        value = info::kl_divergence(p, q, smoothing);
    } else if (kind == "js") {
        value = info::js_divergence(p, q);
    } else if (kind == "bhatt") {
        value = info::bhattacharyya(p, q);
    } else if (kind == "hellinger") {
        value = info::hellinger(p, q);
    } else if (kind == "tv") {
        value = info::tv_wasserstein(p, q);
    } else {
        throw validation_error("unknown divergence kind '" + kind + "'");
    }
    std::ostringstream os;
    os << "{\"kind\": \"" << kind << "\", \"value\": " << emit::fmt_double(value)
       << "}\n";
    emit_result(g, os.str(), "");
    return 0;
}

int run_stats(const GlobalOpts& g, const std::string& csv_path,
              const std::string& labels_path, const std::string& fasta_path) {
    std::vector<seqio::PromoterRecord> records = seqio::load_promoter_csv(csv_path);
    if (!fasta_path.empty()) {
        std::map<std::string, seqio::DnaSequence> by_id;
        for (seqio::FastaRecord& rec : seqio::load_fasta(fasta_path)) {
            by_id.emplace(rec.id, std::move(rec.sequence));
        }
        for (seqio::PromoterRecord& rec : records) {
            if (!rec.sequence) {
                const auto it = by_id.find(rec.id);
                if (it != by_id.end()) rec.sequence = it->second;
            }
        }
    }
    const seqio::DatasetStats stats =
        seqio::dataset_stats(records, seqio::load_labels_csv(labels_path));
    emit_result(g, g.format == "csv" ? seqio::stats_to_csv(stats)
                                     : seqio::stats_to_json(stats),
                "");
    return 0;
}

int run_qoltz_train(const GlobalOpts& g, const std::string& fasta_path,
                    const qoltz::TrainConfig& config) {
    std::vector<seqio::DnaSequence> seqs;
    for (seqio::FastaRecord& rec : seqio::load_fasta(fasta_path)) {
        seqs.push_back(std::move(rec.sequence));
    }
    const qoltz::TrainResult r = qoltz::train(seqs, config);
    const std::string out = g.out.empty() ? "loss.csv" : g.out;
    write_file(out, qoltz::trace_to_csv(r.trace));
    write_file(sidecar(out, "model.json"), qoltz::model_to_json(r.model));
    std::cout << "wrote " << out << " and " << sidecar(out, "model.json") << " ("
              << r.train_samples << " train / " << r.val_samples
              << " val samples" << (r.early_stopped ? ", early stop" : "") << ")\n";
    return 0;
}

int run_bench(const GlobalOpts& g, const std::vector<std::string>& schemes,
              const std::vector<std::uint64_t>& lengths, int repeats) {
    if (schemes.empty()) throw validation_error("no schemes given");
    if (repeats < 1) throw validation_error("repeats must be >= 1");
    for (std::size_t i = 1; i < lengths.size(); ++i) {
        if (lengths[i] < lengths[i - 1]) {
            throw validation_error("lengths must be ascending");
        }
    }
    for (const std::string& s : schemes) {
        if (s != "huffman" && s != "classic" && s != "bwt" && s != "entropy") {
            throw validation_error(
                "unbenchable scheme '" + s +
                "' (choose from huffman, classic, bwt, entropy)");
        }
    }

    qsim::Rng rng(g.seed);
    const char bases[] = {'A', 'C', 'G', 'T'};
    std::ostringstream os;
    os << "scheme,length,mean_ns,stddev_ns\n";
    for (const std::string& scheme : schemes) {
        for (std::uint64_t len : lengths) {
            std::string text;
            text.reserve(len);
            for (std::uint64_t i = 0; i < len; ++i) text += bases[rng.uniform_u64(4)];
            const seqio::DnaSequence seq = seqio::DnaSequence::parse(text);

            std::vector<double> samples_ns;
            samples_ns.reserve(repeats);
            for (int r = 0; r < repeats; ++r) {
                const auto begin = std::chrono::steady_clock::now();
                if (scheme == "huffman") {
                    volatile std::uint64_t sink = compress::quanthuff(seq, 0).codebook.total_bits;
                    (void)sink;
                } else if (scheme == "classic") {
                    volatile std::uint64_t sink = compress::classic_huffman(seq).total_bits;
                    (void)sink;
                } else if (scheme == "bwt") {
                    volatile std::uint64_t sink = compress::bwt(seq).primary_index;
                    (void)sink;
                } else {
                    volatile double sink =
                        info::shannon_entropy(info::base_distribution(seq));
                    (void)sink;
                }
                const auto end = std::chrono::steady_clock::now();
                samples_ns.push_back(
                    std::chrono::duration<double, std::nano>(end - begin).count());
            }
            double mean = 0.0;
            for (double v : samples_ns) mean += v;
            mean /= samples_ns.size();
            double var = 0.0;
            for (double v : samples_ns) var += (v - mean) * (v - mean);
            var /= samples_ns.size();
            os << scheme << ',' << len << ',' << emit::fmt_double(mean) << ','
               << emit::fmt_double(std::sqrt(var)) << '\n';
        }
    }
    emit_result(g, os.str(), "");
    return 0;
}

int run_verify(const GlobalOpts& g, const std::vector<std::string>& only,
               const std::string& fault) {
    verify::Options options;
    options.seed = g.seed != 0 ? g.seed : options.seed;
    options.only = only;
    if (fault == "qft-sign") {
        options.fault = verify::Fault::QftSignFlip;
    } else if (!fault.empty()) {
        throw validation_error("unknown fault '" + fault + "'");
    }
    const std::vector<verify::CheckRow> rows = verify::run_suites(options);
    std::cout << verify::render_table(rows);
    for (const verify::CheckRow& row : rows) {
        if (!row.passed) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genoq: classical-to-quantum DNA sequence encoding toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed for sampling and shuffles")
        ->envname("GENQ_SEED");
    app.add_option("--max-qubits", g.max_qubits, "qubit budget (hard ceiling 28)")
        ->envname("GENQ_MAX_QUBITS")
        ->check(CLI::Range(1, qsim::kHardMaxQubits));
    app.add_option("--out", g.out, "output path (default: per-command)");
    app.add_option("--format", g.format, "output format for tabular commands")
        ->check(CLI::IsMember({"json", "csv"}));

    EncodeOpts e;
    CLI::App* encode = app.add_subcommand("encode", "encode data as a statevector");
    encode->add_option("--scheme", e.scheme, "encoding scheme")
        ->required()
        ->check(CLI::IsMember({"amplitude", "pauli", "angle", "huffman", "qbwt",
                               "cosine", "sencode", "nz22", "nz23", "quantig"}));
    encode->add_option("--input", e.input, "DNA sequence or @file");
    encode->add_option("--ref", e.ref, "reference DNA sequence or @file");
    encode->add_option("--vec", e.vec, "comma-separated vector (amplitude only)");
    encode->add_option("--image", e.image, "PGM image path (cosine only)");
    encode->add_option("--alpha", e.alpha, "qubit budget hyperparameter in [0,1]");
    encode->add_option("--metric", e.metric, "quantig metric")
        ->check(CLI::IsMember({"fisher-rao", "hellinger", "tv"}));
    encode->add_option("--smooth", e.smooth,
                       "smoothing epsilon for zero-probability care (try 1e-9)");
    encode->add_option("--shots", e.shots, "measurement shots (qbwt)");
    encode->add_option("--reps", e.reps, "feature map repetitions (pauli)");
    encode->add_option("--k", e.k, "feature map subset size, 1 or 2 (pauli)");
    encode->add_flag("--entangle", e.entangle, "append a CNOT chain (angle)");

    std::string sample_state;
    std::uint64_t sample_shots = 1024;
    CLI::App* sample = app.add_subcommand("sample", "measure a state dump");
    sample->add_option("state", sample_state, "state JSON path")->required();
    sample->add_option("--shots", sample_shots, "number of shots");

    std::string huff_input;
    bool huff_classic = false;
    CLI::App* huffman = app.add_subcommand("huffman", "base codebook for a sequence");
    huffman->add_option("input", huff_input, "DNA sequence or @file")->required();
    huffman->add_flag("--classic", huff_classic, "greedy merge instead of cascade");

    std::string bwt_input;
    CLI::App* bwt_cmd = app.add_subcommand("bwt", "Burrows-Wheeler transform");
    bwt_cmd->add_option("input", bwt_input, "DNA sequence or @file")->required();

    std::string ibwt_input;
    CLI::App* ibwt_cmd = app.add_subcommand("ibwt", "invert a BWT JSON dump");
    ibwt_cmd->add_option("input", ibwt_input, "BWT JSON literal or @file")->required();

    std::string entropy_input;
    CLI::App* entropy = app.add_subcommand("entropy", "base distribution entropy");
    entropy->add_option("--input", entropy_input, "DNA sequence or @file")->required();

    std::string div_kind, div_input, div_ref;
    double div_smooth = 0.0;
    CLI::App* divergence = app.add_subcommand("divergence",
                                              "divergence between two sequences");
    divergence->add_option("--kind", div_kind, "measure")
        ->required()
        ->check(CLI::IsMember({"kl", "js", "bhatt", "hellinger", "tv"}));
    divergence->add_option("--input", div_input, "DNA sequence or @file")->required();
    divergence->add_option("--ref", div_ref, "reference sequence or @file")->required();
    divergence->add_option("--smooth", div_smooth, "smoothing epsilon (try 1e-9)");

    std::string stats_csv, stats_labels, stats_fasta;
    CLI::App* stats = app.add_subcommand("stats", "promoter dataset statistics");
    stats->add_option("--csv", stats_csv, "promoter CSV path")->required();
    stats->add_option("--labels", stats_labels, "labels CSV (id,split,class)")
        ->required();
    stats->add_option("--fasta", stats_fasta, "FASTA sidecar keyed by id");

    std::string train_input;
    qoltz::TrainConfig train_config;
    CLI::App* qoltz_cmd = app.add_subcommand("qoltz", "energy-based test harness");
    CLI::App* train = qoltz_cmd->add_subcommand("train", "fit the energy model");
    train->add_option("--input", train_input, "FASTA of equal-length sequences")
        ->required();
    train->add_option("--layers", train_config.layers, "coupling layers");
    train->add_option("--steps", train_config.steps, "optimization steps");
    train->add_option("--lr", train_config.learning_rate, "learning rate in (0,1]");
    train->add_option("--batch", train_config.batch_size, "mini-batch size");
    train->add_option("--split", train_config.split_fraction,
                      "training fraction in (0,1)");
    train->add_option("--segments", train_config.segments_per_sequence,
                      "segments per encoded sequence");
    qoltz_cmd->require_subcommand(1);

    std::vector<std::string> bench_schemes;
    std::vector<std::uint64_t> bench_lengths;
    int bench_repeats = 20;
    CLI::App* bench = app.add_subcommand("bench", "time the classical coders");
    bench->add_option("--schemes", bench_schemes, "comma list of schemes")
        ->required()
        ->delimiter(',');
    bench->add_option("--lengths", bench_lengths, "ascending sequence lengths")
        ->required()
        ->delimiter(',');
    bench->add_option("--repeats", bench_repeats, "runs per (scheme, length)");

    std::vector<std::string> verify_only;
    std::string verify_fault;
    CLI::App* verify_cmd = app.add_subcommand("verify",
                                              "run the oracle cross-checks");
    verify_cmd->add_option("--only", verify_only, "subset of suites")->delimiter(',');
    verify_cmd
        ->add_option("--inject-fault", verify_fault,
                     "self-test hook: qft-sign mutates the QFT under test")
        ->check(CLI::IsMember({"qft-sign"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*encode) return run_encode(g, e);
        if (*sample) return run_sample(g, sample_state, sample_shots);
        if (*huffman) return run_huffman(g, huff_input, huff_classic);
        if (*bwt_cmd) return run_bwt(g, bwt_input);
        if (*ibwt_cmd) return run_ibwt(g, ibwt_input);
        if (*entropy) return run_entropy(g, entropy_input);
        if (*divergence) {
            return run_divergence(g, div_kind, div_input, div_ref, div_smooth);
        }
        if (*stats) return run_stats(g, stats_csv, stats_labels, stats_fasta);
        if (*qoltz_cmd) {
            train_config.seed = g.seed;
            return run_qoltz_train(g, train_input, train_config);
        }
        if (*bench) return run_bench(g, bench_schemes, bench_lengths, bench_repeats);
        if (*verify_cmd) return run_verify(g, verify_only, verify_fault);
    } catch (const cap_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const validation_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
