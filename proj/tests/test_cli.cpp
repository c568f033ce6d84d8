// Drives the som binary end to end through a shell.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "som/data.hpp"
#include "som/eval.hpp"
#include "som/labeling.hpp"
#include "som/model_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("som_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    Result run(const std::string& args) const {
        const std::string cmd = std::string(SOM_CLI_PATH) + " " + args + " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        std::string out;
        std::array<char, 4096> buf{};
        while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
        const int status = pclose(pipe);
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    // synth -> split -> train with labels, at a small size.
    void pipeline(const std::string& extra = "") {
        ASSERT_EQ(run("synth --n 120 --seed 3 --out " + path("all.csv")).code, 0);
        ASSERT_EQ(run("split --data " + path("all.csv") + " --ratio 0.75 --seed 3 --train-out " + path("train.csv") +
                      " --test-out " + path("test.csv"))
                      .code,
                  0);
        const auto r = run("train --data " + path("train.csv") + " --rows 5 --cols 5 --epochs 20 --out " +
                           path("model.json") + " " + extra);
        ASSERT_EQ(r.code, 0);
        ASSERT_NE(r.out.find("quantization error: "), std::string::npos);
    }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, SynthIsDeterministic) {
    ASSERT_EQ(run("synth --n 100 --seed 7 --out " + path("a.csv")).code, 0);
    ASSERT_EQ(run("synth --n 100 --seed 7 --out " + path("b.csv")).code, 0);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_EQ(som::load_csv(path("a.csv")), som::synth_generate(100, 7));
}

TEST_F(Cli, SplitPartitions) {
    ASSERT_EQ(run("synth --n 10 --seed 1 --out " + path("d.csv")).code, 0);
    ASSERT_EQ(run("split --data " + path("d.csv") + " --ratio 0.8 --seed 2 --train-out " + path("tr.csv") +
                  " --test-out " + path("te.csv"))
                  .code,
              0);
    const auto tr = som::load_csv(path("tr.csv"));
    const auto te = som::load_csv(path("te.csv"));
    EXPECT_EQ(tr.size(), 8u);
    EXPECT_EQ(te.size(), 2u);
    std::vector<som::Record> merged = tr.records(), orig = som::load_csv(path("d.csv")).records();
    merged.insert(merged.end(), te.records().begin(), te.records().end());
    auto less = [](const som::Record& a, const som::Record& b) { return a.features < b.features; };
    std::sort(merged.begin(), merged.end(), less);
    std::sort(orig.begin(), orig.end(), less);
    EXPECT_EQ(merged, orig);
}

TEST_F(Cli, TrainWritesValidModelDeterministically) {
    pipeline();
    const auto first = slurp(path("model.json"));
    const auto file = som::model_from_json(first);
    EXPECT_EQ(file.model.lattice(), som::LatticeSpec(5, 5));
    EXPECT_TRUE(file.label_map.has_value());
    EXPECT_TRUE(file.model.normalization().has_value());
    pipeline();
    EXPECT_EQ(slurp(path("model.json")), first);
}

TEST_F(Cli, TrainWithoutNormalization) {
    pipeline("--no-normalize");
    EXPECT_FALSE(som::load_model(path("model.json")).model.normalization().has_value());
}

TEST_F(Cli, PredictMatchesLibrary) {
    pipeline();
    ASSERT_EQ(run("predict --model " + path("model.json") + " --data " + path("test.csv") + " --out " + path("p.csv"))
                  .code,
              0);
    const auto file = som::load_model(path("model.json"));
    const auto test = som::load_csv(path("test.csv"));
    const auto expected = som::predict_batch(file.model, *file.label_map, som::to_model_space(file.model, test));

    const auto out = som::parse_csv(slurp(path("p.csv")));
    ASSERT_EQ(out.feature_names().back(), "predicted_fracture_location");
    ASSERT_EQ(out.size(), test.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        EXPECT_EQ(std::vector<double>(out[i].features.begin(), out[i].features.end() - 1), test[i].features);
        EXPECT_EQ(out[i].label, test[i].label);
        EXPECT_EQ(out[i].features.back(), static_cast<double>(expected[i]));
    }
}

TEST_F(Cli, EvaluateMatchesLibrary) {
    pipeline();
    const auto r = run("evaluate --model " + path("model.json") + " --data " + path("test.csv"));
    ASSERT_EQ(r.code, 0);
    const auto file = som::load_model(path("model.json"));
    const auto report =
        som::evaluate(file.model, *file.label_map, som::to_model_space(file.model, som::load_csv(path("test.csv"))));
    char line[64];
    std::snprintf(line, sizeof line, "accuracy: %.4f\n", report.accuracy);
    EXPECT_EQ(r.out.rfind(line, 0), 0u) << r.out;
}

TEST_F(Cli, EvaluateSeparableToySet) {
    {
        std::ofstream f(path("toy.csv"));
        f << "a,b,fracture_location\n";
        for (int i = 0; i < 10; ++i) f << 0.01 * i << ",0," << 0 << "\n" << 5 + 0.01 * i << ",5," << 1 << "\n";
    }
    ASSERT_EQ(run("train --data " + path("toy.csv") + " --rows 2 --cols 2 --epochs 30 --out " + path("m.json")).code, 0);
    const auto r = run("evaluate --model " + path("m.json") + " --data " + path("toy.csv"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("accuracy: 1.0000\n", 0), 0u) << r.out;
}

TEST_F(Cli, RenderOutputs) {
    pipeline();
    const auto text = run("render --model " + path("model.json") + " --what labelmap --format text");
    ASSERT_EQ(text.code, 0);
    EXPECT_EQ(text.out.size(), 5u * 6u);
    const auto u = run("render --model " + path("model.json") + " --what umatrix --format pgm --out " + path("u.pgm"));
    ASSERT_EQ(u.code, 0);
    const auto pgm = slurp(path("u.pgm"));
    EXPECT_EQ(pgm.substr(0, 11), "P5\n5 5\n255\n");
    EXPECT_EQ(pgm.size(), 11u + 25u);
    // 5 rows of "d.dddddd" x5, 4 separators, newline
    EXPECT_EQ(run("render --model " + path("model.json") + " --what umatrix").out.size(), 5u * 45u);
}

TEST_F(Cli, ExitCodes) {
    ASSERT_EQ(run("synth --n 30 --seed 1 --out " + path("d.csv")).code, 0);
    // usage
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("train --data " + path("d.csv") + " --rows 0 --out " + path("m.json")).code, 1);
    EXPECT_EQ(run("train --data " + path("d.csv") + " --lr0 1.5 --out " + path("m.json")).code, 1);
    EXPECT_EQ(run("split --data " + path("d.csv") + " --ratio 1.5 --train-out a --test-out b").code, 1);
    EXPECT_EQ(run("render --model x --what histogram").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    // data / parse
    EXPECT_EQ(run("train --data " + path("missing.csv") + " --out " + path("m.json")).code, 2);
    {
        std::ofstream f(path("bad.csv"));
        f << "a,b\n1,x\n";
    }
    EXPECT_EQ(run("train --data " + path("bad.csv") + " --out " + path("m.json")).code, 2);
    {
        std::ofstream f(path("v2.json"));
        f << R"({"format_version": 2})";
    }
    EXPECT_EQ(run("evaluate --model " + path("v2.json") + " --data " + path("d.csv")).code, 2);
    // state: a model trained on unlabeled data has no label map
    {
        std::ofstream f(path("unlabeled.csv"));
        f << "a,b\n0,0\n1,1\n";
    }
    ASSERT_EQ(run("train --data " + path("unlabeled.csv") + " --rows 2 --cols 2 --out " + path("u.json")).code, 0);
    EXPECT_EQ(run("predict --model " + path("u.json") + " --data " + path("unlabeled.csv")).code, 3);
    EXPECT_EQ(run("evaluate --model " + path("u.json") + " --data " + path("d.csv")).code, 3);
    EXPECT_EQ(run("render --model " + path("u.json") + " --what labelmap").code, 3);
    EXPECT_EQ(run("render --model " + path("u.json") + " --what umatrix").code, 0);
}
