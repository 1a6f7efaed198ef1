#include <cstdio>
#include <exception>

#include "CLI11.hpp"
#include "wskdc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Wilson-score kernel density classification"};
    app.require_subcommand(1);

    wskdc::FitOptions fit;
    double fit_h = 0.0;
    auto* fit_cmd = app.add_subcommand("fit", "fit a model from a labeled CSV");
    fit_cmd->add_option("data", fit.data_path, "training CSV with a \"label\" column")
        ->required();
    fit_cmd->add_option("-o,--out", fit.out_model_path, "output model path")->required();
    auto* h_option = fit_cmd->add_option("--bandwidth", fit_h, "explicit bandwidth");
    fit_cmd->add_flag("--optimize", fit.optimize, "select the bandwidth by cross-validation");
    fit_cmd->add_option("--alpha", fit.alpha, "confidence level");
    fit_cmd->add_option("--seed", fit.seed, "random seed");
    fit_cmd->add_option("--folds", fit.folds, "cross-validation folds");
    fit_cmd->add_option("--steps", fit.steps, "bandwidth grid size");
    fit_cmd->add_flag("--stratified", fit.stratified, "stratify folds by class");
    fit_cmd->add_option("--threads", fit.threads, "worker threads (0 = auto)");

    wskdc::PredictOptions predict;
    auto* predict_cmd = app.add_subcommand("predict", "predict bounds and decisions per row");
    predict_cmd->add_option("model", predict.model_path, "model file from fit")->required();
    predict_cmd->add_option("queries", predict.query_path, "query CSV (features only)")
        ->required();
    predict_cmd->add_option("-o,--out", predict.out_path, "output CSV path")->required();
    predict_cmd->add_option("--tau", predict.tau, "decision threshold");
    predict_cmd->add_option("--threads", predict.threads, "worker threads (0 = auto)");

    wskdc::EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "run the repeated selective-classification "
                                                "experiment");
    eval_cmd->add_option("data", eval.data_path, "labeled CSV")->required();
    eval_cmd->add_option("-o,--out", eval.out_dir, "output directory")->required();
    eval_cmd->add_option("--train-fraction", eval.train_fraction, "training split fraction");
    eval_cmd->add_option("--repeats", eval.repeats, "number of seeded repeats");
    eval_cmd->add_option("--seed", eval.seed, "base seed");
    eval_cmd->add_option("--alpha", eval.alpha, "confidence level");
    eval_cmd->add_option("--tau", eval.tau, "decision threshold");
    eval_cmd->add_option("--folds", eval.folds, "cross-validation folds");
    eval_cmd->add_option("--steps", eval.steps, "bandwidth grid size");
    eval_cmd->add_flag("--stratified", eval.stratified, "stratify folds by class");
    eval_cmd->add_flag("--plot", eval.plot, "also write curves.svg");
    eval_cmd->add_option("--threads", eval.threads, "worker threads (0 = auto)");

    wskdc::BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "time optimization and inference over "
                                                  "subset sizes");
    bench_cmd->add_option("data", bench.data_path, "labeled CSV")->required();
    bench_cmd->add_option("-o,--out", bench.out_path, "output CSV path")->required();
    bench_cmd->add_option("--sizes", bench.sizes, "subset sizes")->required()->delimiter(',');
    bench_cmd->add_option("--draws", bench.draws, "subset draws per size");
    bench_cmd->add_option("--seed", bench.seed, "base seed");
    bench_cmd->add_option("--alpha", bench.alpha, "confidence level");
    bench_cmd->add_option("--folds", bench.folds, "cross-validation folds");
    bench_cmd->add_option("--steps", bench.steps, "bandwidth grid size");
    bench_cmd->add_option("--threads", bench.threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
        if (h_option->count() > 0) fit.h = fit_h;
        if (fit_cmd->parsed())
            wskdc::cmd_fit(fit);
        else if (predict_cmd->parsed())
            wskdc::cmd_predict(predict);
        else if (eval_cmd->parsed())
            wskdc::cmd_eval(eval);
        else if (bench_cmd->parsed())
            wskdc::cmd_bench(bench);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
