#include "ccral/linear_model.hpp"

#include <cmath>
#include <fstream>

#include "ccral/errors.hpp"
#include "ccral/kernels.hpp"

namespace ccral {

const char* to_string(LossKind kind) {
    return kind == LossKind::logistic ? "logistic" : "hinge";
}

LossKind loss_kind_from_string(const std::string& s) {
    if (s == "logistic") return LossKind::logistic;
    if (s == "hinge") return LossKind::hinge;
    throw BadConfig("unknown loss kind: " + s);
}

namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

double LinearModel::predict_score(std::span<const double> x) const {
    if (x.size() != weights.size())
        throw DimensionMismatch("predict_score: expected dimension " +
                                std::to_string(weights.size()));
    return sigmoid(kernels::active().dot(x.data(), weights.data(), x.size()) + bias);
}

std::uint8_t LinearModel::predict_label(std::span<const double> x) const {
    return predict_score(x) >= 0.5 ? 1 : 0;
}

std::vector<double> LinearModel::scores(const Dataset& ds) const {
    std::vector<double> out(ds.n);
    for (std::size_t i = 0; i < ds.n; ++i) out[i] = predict_score(ds.row(i));
    return out;
}

std::vector<std::uint8_t> LinearModel::labels(const Dataset& ds) const {
    std::vector<std::uint8_t> out(ds.n);
    for (std::size_t i = 0; i < ds.n; ++i) out[i] = predict_label(ds.row(i));
    return out;
}

nlohmann::json LinearModel::to_json() const {
    nlohmann::ordered_json j;
    j["loss_kind"] = to_string(loss_kind);
    j["weights"] = weights;
    j["bias"] = bias;
    return j;
}

LinearModel LinearModel::from_json(const nlohmann::json& j) {
    LinearModel m;
    try {
        m.loss_kind = loss_kind_from_string(j.at("loss_kind").get<std::string>());
        m.weights = j.at("weights").get<std::vector<double>>();
        m.bias = j.at("bias").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw BadConfig(std::string("malformed model json: ") + e.what());
    }
    return m;
}

void LinearModel::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw FileUnreadable("cannot write " + path);
    out << to_json().dump(2) << '\n';
}

LinearModel LinearModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileUnreadable("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadConfig(path + ": " + e.what());
    }
    return from_json(j);
}

void TrainConfig::validate() const {
    if (l2_lambda < 0) throw BadConfig("l2_lambda must be >= 0");
    if (learning_rate <= 0) throw BadConfig("learning_rate must be > 0");
    if (max_epochs == 0) throw BadConfig("max_epochs must be >= 1");
    if (tol <= 0) throw BadConfig("tol must be > 0");
}

LossGrad loss_and_gradient(const LinearModel& m, const Dataset& ds, double l2_lambda) {
    if (ds.n == 0) throw EmptyInput("loss_and_gradient: empty dataset");
    if (ds.d != m.weights.size())
        throw DimensionMismatch("loss_and_gradient: model/dataset dimension mismatch");

    const auto& ops = kernels::active();
    const std::size_t d = ds.d;
    LossGrad out;
    out.grad.assign(d + 1, 0.0);

    double loss_sum = 0.0;
    double bias_grad = 0.0;
    for (std::size_t i = 0; i < ds.n; ++i) {
        const double* xi = ds.x.data() + i * d;
        const double z = ops.dot(xi, m.weights.data(), d) + m.bias;
        double coeff;  // d(loss_i)/dz
        if (m.loss_kind == LossKind::logistic) {
            const double yi = ds.y[i];
            // max(z,0) - z*y + log1p(exp(-|z|)): stable binary cross-entropy
            loss_sum += std::max(z, 0.0) - z * yi + std::log1p(std::exp(-std::abs(z)));
            coeff = sigmoid(z) - yi;
        } else {
            const double ysigned = ds.y[i] ? 1.0 : -1.0;
            const double margin = ysigned * z;
            loss_sum += std::max(0.0, 1.0 - margin);
            coeff = margin < 1.0 ? -ysigned : 0.0;
        }
        if (coeff != 0.0) {
            ops.axpy(coeff, xi, out.grad.data(), d);
            bias_grad += coeff;
        }
    }

    const double inv_n = 1.0 / static_cast<double>(ds.n);
    for (std::size_t j = 0; j < d; ++j)
        out.grad[j] = out.grad[j] * inv_n + l2_lambda * m.weights[j];
    out.grad[d] = bias_grad * inv_n;
    out.loss = loss_sum * inv_n +
               0.5 * l2_lambda * kernels::active().dot(m.weights.data(), m.weights.data(), d);
    return out;
}

LinearModel train(const Dataset& ds, const TrainConfig& cfg) {
    cfg.validate();
    if (ds.n == 0) throw EmptyInput("train: empty dataset");
    if (!ds.has_both_labels()) throw SingleClassTraining("train: only one label value present");

    LinearModel model;
    model.loss_kind = cfg.loss_kind;
    model.weights.assign(ds.d, 0.0);
    model.bias = 0.0;
    model.trained_on = ds.n;

    double lr = cfg.learning_rate;
    LossGrad cur = loss_and_gradient(model, ds, cfg.l2_lambda);
    if (!std::isfinite(cur.loss)) throw DivergedLoss("non-finite loss at initialization");

    LinearModel candidate = model;
    for (std::size_t epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        for (std::size_t j = 0; j < ds.d; ++j)
            candidate.weights[j] = model.weights[j] - lr * cur.grad[j];
        candidate.bias = model.bias - lr * cur.grad[ds.d];

        const LossGrad next = loss_and_gradient(candidate, ds, cfg.l2_lambda);
        if (!std::isfinite(next.loss)) throw DivergedLoss("non-finite loss during descent");
        if (next.loss > cur.loss) {
            // Reject the step; a smaller rate keeps the accepted-loss
            // sequence non-increasing. The rejected epoch still counts.
            lr *= 0.5;
            continue;
        }
        const double improvement = cur.loss - next.loss;
        model.weights = candidate.weights;
        model.bias = candidate.bias;
        cur = next;
        if (improvement < cfg.tol) break;
    }
    return model;
}

}  // namespace ccral
