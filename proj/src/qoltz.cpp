#include "genoq/qoltz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "genoq/emit.hpp"
#include "genoq/errors.hpp"

namespace genoq::qoltz {

namespace {

void check_model(const EnergyModel& model) {
    if (model.n < 1) throw validation_error("energy model needs at least one spin");
    if (model.layers < 1) throw validation_error("energy model needs at least one layer");
    for (const auto& w : model.couplings) {
        if (static_cast<int>(w.size()) != model.layers) {
            throw validation_error("coupling array layer count mismatch");
        }
        for (const auto& row : w) {
            if (static_cast<int>(row.size()) != model.n - 1) {
                throw validation_error("coupling array width mismatch");
            }
            for (double v : row) {
                if (!std::isfinite(v)) throw validation_error("non-finite coupling");
            }
        }
    }
    if (static_cast<int>(model.biases.size()) != model.n) {
        throw validation_error("bias count mismatch");
    }
}

void check_enumerable(const EnergyModel& model) {
    if (model.n > kMaxSpins) {
        throw validation_error("spin count " + std::to_string(model.n) +
                               " exceeds the exact-enumeration bound " +
                               std::to_string(kMaxSpins));
    }
}

SpinSample sample_from_index(std::uint64_t idx, int n) {
    SpinSample s(n);
    for (int i = 0; i < n; ++i) s[i] = (idx >> (n - 1 - i)) & 1;
    return s;
}

struct ModelMoments {
    double z = 0.0;
    std::vector<std::vector<double>> pair;  // <s_i s_{i+1}> per (L, i): equal across L
    std::vector<double> site;               // <s_i>
};

// Z plus model expectations in one enumeration pass.
ModelMoments enumerate_moments(const EnergyModel& model) {
    check_model(model);
    check_enumerable(model);
    ModelMoments m;
    m.pair.assign(model.layers, std::vector<double>(model.n - 1, 0.0));
    m.site.assign(model.n, 0.0);
    std::vector<double> pair_acc(model.n - 1, 0.0);
    const std::uint64_t dim = 1ull << model.n;
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        const SpinSample s = sample_from_index(idx, model.n);
        const double w = std::exp(-energy(s, model));
        m.z += w;
        for (int i = 0; i + 1 < model.n; ++i) {
            if (s[i] && s[i + 1]) pair_acc[i] += w;
        }
        for (int i = 0; i < model.n; ++i) {
            if (s[i]) m.site[i] += w;
        }
    }
    for (int i = 0; i + 1 < model.n; ++i) pair_acc[i] /= m.z;
    for (int i = 0; i < model.n; ++i) m.site[i] /= m.z;
    for (int layer = 0; layer < model.layers; ++layer) m.pair[layer] = pair_acc;
    return m;
}

}  // namespace

EnergyModel EnergyModel::zeros(int n, int layers) {
    EnergyModel m;
    m.n = n;
    m.layers = layers;
    for (auto& w : m.couplings) {
        w.assign(layers, std::vector<double>(std::max(0, n - 1), 0.0));
    }
    m.biases.assign(n, 0.0);
    return m;
}

double EnergyModel::effective_coupling(int layer, int i) const {
    return couplings[0][layer][i] + couplings[1][layer][i] + couplings[2][layer][i];
}

double energy(const SpinSample& sample, const EnergyModel& model) {
    check_model(model);
    if (static_cast<int>(sample.size()) != model.n) {
        throw validation_error("sample length does not match spin count");
    }
    double e = 0.0;
    for (int layer = 0; layer < model.layers; ++layer) {
        for (int i = 0; i + 1 < model.n; ++i) {
            if (sample[i] && sample[i + 1]) e += model.effective_coupling(layer, i);
        }
    }
    for (int i = 0; i < model.n; ++i) {
        if (sample[i]) e -= model.biases[i];
    }
    return e;
}

double partition(const EnergyModel& model) {
    check_model(model);
    check_enumerable(model);
    double z = 0.0;
    const std::uint64_t dim = 1ull << model.n;
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        z += std::exp(-energy(sample_from_index(idx, model.n), model));
    }
    return z;
}

double nll_cost(const std::vector<SpinSample>& data, const EnergyModel& model) {
    if (data.empty()) throw validation_error("cost needs at least one sample");
    double mean_e = 0.0;
    for (const SpinSample& s : data) mean_e += energy(s, model);
    mean_e /= static_cast<double>(data.size());
    return mean_e + std::log(partition(model));
}

Gradient gradient(const std::vector<SpinSample>& data, const EnergyModel& model) {
    if (data.empty()) throw validation_error("gradient needs at least one sample");
    const ModelMoments moments = enumerate_moments(model);

    std::vector<double> data_pair(model.n - 1, 0.0);
    std::vector<double> data_site(model.n, 0.0);
    for (const SpinSample& s : data) {
        if (static_cast<int>(s.size()) != model.n) {
            throw validation_error("sample length does not match spin count");
        }
        for (int i = 0; i + 1 < model.n; ++i) {
            if (s[i] && s[i + 1]) data_pair[i] += 1.0;
        }
        for (int i = 0; i < model.n; ++i) {
            if (s[i]) data_site[i] += 1.0;
        }
    }
    const double inv = 1.0 / static_cast<double>(data.size());
    for (double& v : data_pair) v *= inv;
    for (double& v : data_site) v *= inv;

    Gradient g;
    g.coupling.assign(model.layers, std::vector<double>(model.n - 1, 0.0));
    for (int layer = 0; layer < model.layers; ++layer) {
        for (int i = 0; i + 1 < model.n; ++i) {
            g.coupling[layer][i] = data_pair[i] - moments.pair[layer][i];
        }
    }
    g.bias.assign(model.n, 0.0);
    for (int i = 0; i < model.n; ++i) g.bias[i] = -data_site[i] + moments.site[i];
    return g;
}

std::string bin_encode_seq(const seqio::DnaSequence& seq) {
    std::string bits;
    bits.reserve(2 * seq.size());
    for (char b : seq) bits += seqio::base_bits(b, "two-bit");
    return bits;
}

BitSegments segment_bits(const std::string& bits, std::size_t k) {
    if (k == 0) throw validation_error("segment count must be positive");
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw validation_error(std::string("invalid bit '") + c + "'");
        }
    }
    const std::size_t len = bits.size();
    const std::size_t size = len % k == 0 ? len / k : (len - 1) / k;
    BitSegments out;
    for (std::size_t j = 0; j < k; ++j) {
        out.segments.push_back(bits.substr(j * size, size));
    }
    out.leftover = len - k * size;
    return out;
}

TrainResult train(const std::vector<seqio::DnaSequence>& sequences,
                  const TrainConfig& config) {
    if (sequences.empty()) throw validation_error("training needs sequences");
    if (config.steps < 1) throw validation_error("steps must be positive");
    if (!(config.learning_rate > 0.0 && config.learning_rate <= 1.0)) {
        throw validation_error("learning rate must lie in (0, 1]");
    }
    if (config.batch_size < 1) throw validation_error("batch size must be positive");
    if (!(config.split_fraction > 0.0 && config.split_fraction < 1.0)) {
        throw validation_error("split fraction must lie in (0, 1)");
    }
    if (config.layers < 1) throw validation_error("layer count must be positive");
    if (config.segments_per_sequence < 1) {
        throw validation_error("segment count must be positive");
    }

    // Encode every sequence and collect the segment bit patterns as samples.
    std::vector<SpinSample> samples;
    int n = -1;
    for (const seqio::DnaSequence& seq : sequences) {
        if (seq.size() != sequences.front().size()) {
            throw validation_error("all training sequences must share one length");
        }
        const BitSegments segs = segment_bits(
            bin_encode_seq(seq),
            static_cast<std::size_t>(config.segments_per_sequence));
        for (const std::string& bits : segs.segments) {
            if (n < 0) n = static_cast<int>(bits.size());
            SpinSample s(bits.size());
            for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] == '1';
            samples.push_back(std::move(s));
        }
    }
    if (n < 1) throw validation_error("segmentation produced empty samples");
    if (n > kMaxSpins) {
        throw validation_error("segment width " + std::to_string(n) +
                               " exceeds the exact-enumeration bound " +
                               std::to_string(kMaxSpins));
    }

    qsim::Rng rng(config.seed);
    rng.shuffle(samples);
    const std::size_t n_train = static_cast<std::size_t>(
        config.split_fraction * static_cast<double>(samples.size()));
    if (n_train == 0 || n_train == samples.size()) {
        throw validation_error("degenerate split: need samples on both sides");
    }
    const std::vector<SpinSample> train_set(samples.begin(),
                                            samples.begin() + n_train);
    const std::vector<SpinSample> val_set(samples.begin() + n_train, samples.end());

    TrainResult result;
    result.train_samples = train_set.size();
    result.val_samples = val_set.size();
    result.model = EnergyModel::zeros(n, config.layers);
    for (auto& w : result.model.couplings) {
        for (auto& row : w) {
            for (double& v : row) v = rng.uniform_real(-0.01, 0.01);
        }
    }

    double last_j = 0.0;
    int flat_steps = 0;
    for (int step = 0; step < config.steps; ++step) {
        // Mini-batch by partial Fisher-Yates over index space.
        std::vector<std::size_t> idx(train_set.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        rng.shuffle(idx);
        const std::size_t batch_n =
            std::min<std::size_t>(config.batch_size, train_set.size());
        std::vector<SpinSample> batch;
        batch.reserve(batch_n);
        for (std::size_t i = 0; i < batch_n; ++i) batch.push_back(train_set[idx[i]]);

        const Gradient g = gradient(batch, result.model);
        for (auto& w : result.model.couplings) {
            for (int layer = 0; layer < config.layers; ++layer) {
                for (int i = 0; i + 1 < n; ++i) {
                    w[layer][i] -= config.learning_rate * g.coupling[layer][i];
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            result.model.biases[i] -= config.learning_rate * g.bias[i];
        }

        const double train_j = nll_cost(train_set, result.model);
        const double val_j = nll_cost(val_set, result.model);
        if (!std::isfinite(train_j) || !std::isfinite(val_j)) {
            throw validation_error("training diverged: non-finite loss at step " +
                                   std::to_string(step));
        }
        result.trace.push_back({step, train_j, val_j});

        if (step > 0 && std::abs(train_j - last_j) < 1e-9) {
            if (++flat_steps >= 10) {
                result.early_stopped = true;
                break;
            }
        } else {
            flat_steps = 0;
        }
        last_j = train_j;
    }
    return result;
}

std::string model_to_json(const EnergyModel& model) {
    auto emit_matrix = [](std::ostringstream& os,
                          const std::vector<std::vector<double>>& mat) {
        os << '[';
        for (std::size_t r = 0; r < mat.size(); ++r) {
            if (r > 0) os << ", ";
            os << '[';
            for (std::size_t c = 0; c < mat[r].size(); ++c) {
                if (c > 0) os << ", ";
                os << emit::fmt_double(mat[r][c]);
            }
            os << ']';
        }
        os << ']';
    };
    std::ostringstream os;
    os << "{\"n\": " << model.n << ", \"layers\": " << model.layers;
    const char* names[3] = {"w0", "w1", "w2"};
    for (int c = 0; c < 3; ++c) {
        os << ", \"" << names[c] << "\": ";
        emit_matrix(os, model.couplings[c]);
    }
    os << ", \"B\": [";
    for (std::size_t i = 0; i < model.biases.size(); ++i) {
        if (i > 0) os << ", ";
        os << emit::fmt_double(model.biases[i]);
    }
    os << "]}\n";
    return os.str();
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
    std::ostringstream os;
    os << "step,train_J,val_J\n";
    for (const TraceRow& row : trace) {
        os << row.step << ',' << emit::fmt_double(row.train_j) << ','
           << emit::fmt_double(row.val_j) << '\n';
    }
    return os.str();
}

}  // namespace genoq::qoltz
