// som: command-line front end for training and applying self-organizing maps
// on tabular weld-parameter data.
//
// Exit codes: 0 success, 1 usage error, 2 data/parse error, 3 state error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "som/data.hpp"
#include "som/errors.hpp"
#include "som/eval.hpp"
#include "som/labeling.hpp"
#include "som/model_io.hpp"
#include "som/render.hpp"
#include "som/som.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kState = 3 };

constexpr const char* kPredictedColumn = "predicted_fracture_location";

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw som::DataError("cannot write '" + path + "'");
    out << content;
}

som::LabelMap require_label_map(const som::ModelFile& file) {
    if (!file.label_map) throw som::StateError("model has no label map; train on labeled data first");
    return *file.label_map;
}

struct SynthArgs {
    std::size_t n = 200;
    std::uint64_t seed = 7;
    std::string out;
};

int run_synth(const SynthArgs& a) {
    som::save_csv(som::synth_generate(a.n, a.seed), a.out);
    return kOk;
}

struct SplitArgs {
    std::string data;
    double ratio = 0.8;
    std::uint64_t seed = 42;
    std::string train_out;
    std::string test_out;
};

int run_split(const SplitArgs& a) {
    const auto ds = som::load_csv(a.data);
    auto [train, test] = som::train_test_split(ds, a.ratio, a.seed);
    som::save_csv(train, a.train_out);
    som::save_csv(test, a.test_out);
    std::cout << "train: " << train.size() << " records, test: " << test.size() << " records\n";
    return kOk;
}

struct TrainArgs {
    std::string data;
    std::size_t rows = 10;
    std::size_t cols = 10;
    som::TrainConfig config;
    std::string init = "uniform";
    bool no_normalize = false;
    std::string out;
};

int run_train(TrainArgs a) {
    const auto raw = som::load_csv(a.data);
    if (raw.empty()) throw som::DataError("'" + a.data + "' has no records");
    a.config.init = som::parse_init_scheme(a.init);
    const som::LatticeSpec lattice(a.rows, a.cols);

    std::optional<som::NormalizationParams> norm;
    if (!a.no_normalize) norm = som::fit_normalizer(raw);
    const auto data = norm ? som::apply_normalizer(*norm, raw) : raw;

    const auto config = a.config.resolve(lattice, data.size());
    auto model = som::train(data, lattice, config);
    model.set_normalization(norm);

    som::ModelFile file{model, raw.feature_names(), std::nullopt, config};

    som::Dataset labeled = data.empty_like();
    for (const auto& r : data.records()) {
        if (r.label) labeled.add(r);
    }
    if (!labeled.empty()) file.label_map = som::build_label_map(model, labeled);

    som::save_model(file, a.out);

    std::printf("quantization error: %.6f\n", som::quantization_error(model, data));
    if (file.label_map) {
        std::printf("labeled neurons: %zu / %zu\n", file.label_map->labeled_count(), model.neuron_count());
    }
    return kOk;
}

struct PredictArgs {
    std::string model;
    std::string data;
    std::string out;
};

int run_predict(const PredictArgs& a) {
    const auto file = som::load_model(a.model);
    const auto labels = require_label_map(file);
    const auto raw = som::load_csv(a.data);
    const auto predicted = som::predict_batch(file.model, labels, som::to_model_space(file.model, raw));

    std::string csv;
    for (const auto& name : raw.feature_names()) csv += name + ",";
    if (raw.has_label_column()) csv += std::string(som::kLabelColumn) + ",";
    csv += std::string(kPredictedColumn) + "\n";
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (double v : raw[i].features) csv += som::format_real(v) + ",";
        if (raw.has_label_column()) {
            if (raw[i].label) csv += std::to_string(*raw[i].label);
            csv += ",";
        }
        csv += std::to_string(predicted[i]) + "\n";
    }
    write_output(a.out, csv);
    return kOk;
}

struct EvaluateArgs {
    std::string model;
    std::string data;
};

int run_evaluate(const EvaluateArgs& a) {
    const auto file = som::load_model(a.model);
    const auto labels = require_label_map(file);
    const auto raw = som::load_csv(a.data);
    const auto report = som::evaluate(file.model, labels, som::to_model_space(file.model, raw));

    std::printf("accuracy: %.4f\n", report.accuracy);
    std::printf("correct: %zu / %zu\n", report.correct, report.total);
    std::printf("confusion (rows: true, cols: predicted)\n");
    std::printf("      ");
    for (std::size_t p = 0; p < report.confusion.size(); ++p) std::printf(" %6zu", p);
    std::printf("\n");
    for (std::size_t t = 0; t < report.confusion.size(); ++t) {
        std::printf("%6zu", t);
        for (auto c : report.confusion[t]) std::printf(" %6zu", c);
        std::printf("\n");
    }
    return kOk;
}

struct RenderArgs {
    std::string model;
    std::string what = "labelmap";
    std::string format = "text";
    std::string out;
};

int run_render(const RenderArgs& a) {
    const auto file = som::load_model(a.model);
    std::string content;
    if (a.what == "labelmap") {
        const auto labels = require_label_map(file);
        content = a.format == "pgm" ? som::render_label_map_pgm(labels) : som::render_label_map_text(labels);
    } else {
        const auto u = som::u_matrix(file.model);
        content = a.format == "pgm" ? som::render_umatrix_pgm(u) : som::render_umatrix_text(u);
    }
    write_output(a.out, content);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-organizing map training and fracture-location classification"};
    app.require_subcommand(1);

    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic labeled weld-parameter CSV");
    synth_cmd->add_option("--n", synth.n, "Number of records")->capture_default_str()->check(CLI::PositiveNumber);
    synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
    synth_cmd->add_option("--out", synth.out, "Output CSV")->required();

    SplitArgs split;
    auto* split_cmd = app.add_subcommand("split", "Seeded train/test split of a CSV");
    split_cmd->add_option("--data", split.data, "Input CSV")->required();
    split_cmd->add_option("--ratio", split.ratio, "Training fraction in (0,1)")->capture_default_str();
    split_cmd->add_option("--seed", split.seed, "Random seed")->capture_default_str();
    split_cmd->add_option("--train-out", split.train_out, "Training CSV")->required();
    split_cmd->add_option("--test-out", split.test_out, "Test CSV")->required();

    TrainArgs train;
    double sigma0 = 0.0, tau_lr = 0.0, tau_sigma = 0.0;
    auto* train_cmd = app.add_subcommand("train", "Train a map, label it when the data has labels");
    train_cmd->add_option("--data", train.data, "Training CSV")->required();
    train_cmd->add_option("--rows", train.rows, "Lattice rows")->capture_default_str()->check(CLI::PositiveNumber);
    train_cmd->add_option("--cols", train.cols, "Lattice columns")->capture_default_str()->check(CLI::PositiveNumber);
    train_cmd->add_option("--epochs", train.config.epochs, "Passes over the data")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    train_cmd->add_option("--lr0", train.config.lr0, "Initial learning rate in (0,1]")->capture_default_str();
    auto* sigma_opt = train_cmd->add_option("--sigma0", sigma0, "Initial neighborhood radius [max(rows,cols)/2]");
    auto* tau_lr_opt = train_cmd->add_option("--tau-lr", tau_lr, "Learning-rate decay constant [steps/4]");
    auto* tau_sigma_opt = train_cmd->add_option("--tau-sigma", tau_sigma, "Radius decay constant [steps/4]");
    train_cmd->add_option("--seed", train.config.seed, "Random seed")->capture_default_str();
    train_cmd->add_option("--init", train.init, "Weight initialization")
        ->capture_default_str()
        ->check(CLI::IsMember({"uniform", "sample"}));
    train_cmd->add_flag("--no-normalize", train.no_normalize, "Train on raw feature values");
    train_cmd->add_option("--out", train.out, "Model JSON")->required();

    PredictArgs predict;
    auto* predict_cmd = app.add_subcommand("predict", "Append predicted labels to a CSV");
    predict_cmd->add_option("--model", predict.model, "Model JSON")->required();
    predict_cmd->add_option("--data", predict.data, "Input CSV")->required();
    predict_cmd->add_option("--out", predict.out, "Output CSV (stdout when omitted)");

    EvaluateArgs evaluate;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Accuracy and confusion matrix on labeled data");
    evaluate_cmd->add_option("--model", evaluate.model, "Model JSON")->required();
    evaluate_cmd->add_option("--data", evaluate.data, "Labeled CSV")->required();

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "Render the label map or U-matrix");
    render_cmd->add_option("--model", render.model, "Model JSON")->required();
    render_cmd->add_option("--what", render.what, "labelmap or umatrix")
        ->capture_default_str()
        ->check(CLI::IsMember({"labelmap", "umatrix"}));
    render_cmd->add_option("--format", render.format, "text or pgm")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "pgm"}));
    render_cmd->add_option("--out", render.out, "Output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*synth_cmd) return run_synth(synth);
        if (*split_cmd) return run_split(split);
        if (*train_cmd) {
            if (*sigma_opt) train.config.sigma0 = sigma0;
            if (*tau_lr_opt) train.config.tau_lr = tau_lr;
            if (*tau_sigma_opt) train.config.tau_sigma = tau_sigma;
            return run_train(train);
        }
        if (*predict_cmd) return run_predict(predict);
        if (*evaluate_cmd) return run_evaluate(evaluate);
        if (*render_cmd) return run_render(render);
    } catch (const som::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const som::StateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kState;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    }
    return kUsage;
}
