"""Command-line entry point.

Subcommands: ``lexicon validate|clean|stats``, ``translate``, ``score``,
``compare``, ``ml train|eval``, ``ctx generate|train|eval``, ``explain``.
Every run echoes its effective configuration and a manifest of produced files
into the output directory, so results are reproducible from disk. Exit codes:
0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import attribution as attr
from . import contextual as ctx
from . import eda
from . import metrics as evalm
from . import ml
from . import scoring
from . import svg
from . import translator as tr
from .lexicon import (
    LanguageCode,
    LexiconFormatError,
    Polarity,
    clean,
    parse_lexicon,
    serialize_lexicon,
    validate_lexicon,
)

MODEL_KINDS = ("decision_tree", "random_forest", "gaussian_nb", "linear_svm")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems instead of argparse's 2
        raise _UsageError(message)


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv_text(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


class OutputDir:
    """Collects written files and finishes with a manifest + config echo."""

    def __init__(self, path: str, config: dict):
        self.path = Path(path)
        self.path.mkdir(parents=True, exist_ok=True)
        self.config = config
        self.files: list[str] = []

    def write(self, name: str, text: str) -> None:
        (self.path / name).write_bytes(text.encode("utf-8"))
        self.files.append(name)

    def finish(self) -> None:
        self.write("run_config.json", _json_text(self.config))
        manifest = {"config": self.config, "files": sorted(self.files + ["manifest.json"])}
        self.write("manifest.json", _json_text(manifest))


def _effective_config(args: argparse.Namespace) -> dict:
    config = {}
    for key, value in sorted(vars(args).items()):
        if key in ("func", "command"):
            continue
        config[key] = value.value if hasattr(value, "value") else value
    return config


def _load_lexicon(path: str):
    return parse_lexicon(Path(path).read_bytes())


def _read_csv_rows(path: str, expected_header: tuple[str, ...]) -> list[list[str]]:
    with open(path, newline="", encoding="utf-8") as handle:
        rows = list(csv.reader(handle))
    if not rows or tuple(rows[0]) != expected_header:
        raise ValueError(
            f"{path}: expected header {','.join(expected_header)}"
        )
    return rows[1:]


# ---------------------------------------------------------------------------
# lexicon subcommands


def cmd_lexicon_validate(args) -> int:
    lexicon = _load_lexicon(args.infile)
    report = validate_lexicon(lexicon)
    text = _json_text(report.to_json_dict())
    if args.out:
        out = OutputDir(args.out, _effective_config(args))
        out.write("validation_report.json", text)
        out.finish()
    else:
        sys.stdout.write(text)
    print(f"{len(lexicon)} entries, {report.issue_count} issues", file=sys.stderr)
    return 0


def cmd_lexicon_clean(args) -> int:
    lexicon = _load_lexicon(args.infile)
    cleaned, report = clean(lexicon)
    out = OutputDir(args.out, _effective_config(args))
    out.write("cleaned.csv", serialize_lexicon(cleaned).decode("utf-8"))
    out.write("cleaning_report.json", _json_text(report.to_json_dict()))
    out.finish()
    print(
        f"{len(lexicon)} entries in, {len(cleaned)} out, "
        f"{report.change_count} changes",
        file=sys.stderr,
    )
    return 0


def cmd_lexicon_stats(args) -> int:
    lexicon = _load_lexicon(args.infile)
    report = eda.compute_eda(lexicon)
    out = OutputDir(args.out, _effective_config(args))
    out.write("eda.json", _json_text(report.to_json_dict()))

    polarities = [p.value for p in Polarity]
    out.write(
        "polarity_counts.svg",
        svg.bar_chart(
            polarities,
            [report.polarity_counts[p] for p in Polarity],
            "entries per polarity (shared score)",
        ),
    )
    pos_rows = [p.value for p in report.pos_by_polarity]
    out.write(
        "pos_by_polarity.svg",
        svg.heatmap_grid(
            pos_rows,
            polarities,
            [[float(report.pos_by_polarity[pos][p]) for p in Polarity]
             for pos in report.pos_by_polarity],
            "POS against polarity",
        ),
    )
    centers = list(eda.HISTOGRAM_CENTERS)
    series = [
        (lang.value, [(float(c), float(n)) for c, n in zip(centers, counts)])
        for lang, counts in report.per_language_histograms.items()
    ]
    out.write(
        "score_densities.svg",
        svg.line_chart(series, "per-language score distribution", "score", "entries"),
    )
    languages = list(LanguageCode)
    out.write(
        "correlation_matrix.svg",
        svg.heatmap_grid(
            [l.value for l in languages],
            [l.value for l in languages],
            [[report.cross_language_correlation[a][b] for b in languages]
             for a in languages],
            "cross-language score correlation",
            fmt="{:.2f}",
        ),
    )
    out.finish()
    print(f"eda over {len(lexicon)} entries written to {out.path}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# translation and scoring


def cmd_translate(args) -> int:
    lexicon = _load_lexicon(args.lex)
    if args.text is not None:
        if not args.source or not args.target:
            raise _UsageError("--text requires --from and --to")
        result = tr.translate(
            args.text,
            LanguageCode.parse(args.source),
            LanguageCode.parse(args.target),
            lexicon,
        )
        print(result.translated_text)
        if result.unknown_count:
            print(f"{result.unknown_count} unknown token(s)", file=sys.stderr)
        return 0
    if not args.infile or not args.out:
        raise _UsageError("batch mode requires --in and --out")
    rows = _read_csv_rows(args.infile, ("sentence", "source_language", "target_language"))
    results = tr.translate_batch(
        [(s, LanguageCode.parse(a), LanguageCode.parse(b)) for s, a, b in rows],
        lexicon,
    )
    out = OutputDir(args.out, _effective_config(args))
    table = [["sentence", "source_language", "target_language", "translated_text"]]
    for r in results:
        table.append(
            [r.source_text, r.source_language.value, r.target_language.value,
             r.translated_text]
        )
    out.write("translations.csv", _csv_text(table))
    out.finish()
    print(f"translated {len(results)} sentences", file=sys.stderr)
    return 0


def _baseline_fn(name: str) -> scoring.BaselineScorer:
    return scoring.builtin_english_baseline if name == "builtin" else scoring.zero_baseline


def _score_rows(args) -> scoring.ComparisonReport:
    lexicon = _load_lexicon(args.lex)
    rows = _read_csv_rows(args.infile, ("sentence", "language"))
    return scoring.score_batch(
        [(s, LanguageCode.parse(l)) for s, l in rows],
        lexicon,
        _baseline_fn(args.baseline),
    )


def cmd_score(args) -> int:
    report = _score_rows(args)
    out = OutputDir(args.out, _effective_config(args))
    out.write("comparison.csv", _csv_text(scoring.comparison_csv_rows(report)))
    out.finish()
    counts = report.polarity_counts[args.mode]
    summary = ", ".join(f"{p.value} {counts[p]}" for p in Polarity)
    print(f"{len(report.rows)} sentences ({args.mode}): {summary}", file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    report = _score_rows(args)
    out = OutputDir(args.out, _effective_config(args))
    out.write("comparison.csv", _csv_text(scoring.comparison_csv_rows(report)))
    out.write("comparison.json", _json_text(report.to_json_dict()))
    out.finish()
    print(
        f"{len(report.rows)} sentences, v2/baseline agreement {report.agreement:.3f}",
        file=sys.stderr,
    )
    return 0


# ---------------------------------------------------------------------------
# classical ml


def _train_ml_model(dataset, args):
    if args.model == "decision_tree":
        return ml.train_decision_tree(
            dataset, max_depth=args.max_depth,
            min_samples_split=args.min_samples_split, seed=args.seed,
        )
    if args.model == "random_forest":
        return ml.train_random_forest(
            dataset, n_trees=args.n_trees, max_depth=args.max_depth,
            min_samples_split=args.min_samples_split, seed=args.seed,
            bootstrap=not args.no_bootstrap,
            feature_subsample=not args.no_feature_subsample,
        )
    if args.model == "gaussian_nb":
        return ml.train_gaussian_nb(dataset, var_smoothing=args.var_smoothing)
    return ml.train_linear_svm(dataset, lam=args.lam, epochs=args.epochs, seed=args.seed)


def _write_evaluation(out: OutputDir, y_true, y_pred, proba, class_names) -> dict:
    cm = evalm.confusion(
        [class_names[t] for t in y_true], [class_names[p] for p in y_pred], class_names
    )
    report = evalm.metrics(cm)
    curves = evalm.roc_one_vs_rest(list(y_true), proba, class_names)
    out.write("confusion.json", _json_text(cm.to_json_dict()))
    out.write("metrics.json", _json_text(report.to_json_dict()))
    out.write("metrics.txt", evalm.metrics_table(report))
    for name, curve in sorted(curves.items()):
        rows = [["false_positive_rate", "true_positive_rate"]]
        rows += [[repr(x), repr(y)] for x, y in curve.points]
        out.write(f"roc_{name}.csv", _csv_text(rows))
    if curves:
        out.write("roc.svg", svg.roc_chart(curves, "one-vs-rest ROC"))
    return {"accuracy": report.accuracy}


def cmd_ml_train(args) -> int:
    lexicon = _load_lexicon(args.lex)
    dataset = ml.featurize(lexicon, task=args.task)
    train_set, test_set = ml.split(dataset, args.train_fraction, args.seed)
    model = _train_ml_model(train_set, args)
    model.hyperparameters["task"] = args.task
    out = OutputDir(args.out, _effective_config(args))
    out.write("model.json", ml.save_model(model))
    out.write("dataset.csv", ml.dataset_csv(dataset))
    summary = {"accuracy": None}
    if len(test_set):
        proba = model.predict_proba(test_set.X)
        summary = _write_evaluation(
            out, test_set.y, model.predict(test_set.X), proba, dataset.class_names
        )
    out.finish()
    print(
        f"{args.model} trained on {len(train_set)}/{len(dataset)} vectors, "
        f"test accuracy {summary['accuracy']}",
        file=sys.stderr,
    )
    return 0


def cmd_ml_eval(args) -> int:
    model = ml.load_model(Path(args.model).read_text(encoding="utf-8"))
    task = args.task or model.hyperparameters.get("task", "pos")
    lexicon = _load_lexicon(args.lex)
    dataset = ml.featurize(lexicon, task=task)
    _, test_set = ml.split(dataset, args.train_fraction, args.seed)
    if not len(test_set):
        raise ValueError("test split is empty")
    out = OutputDir(args.out, _effective_config(args))
    summary = _write_evaluation(
        out, test_set.y, model.predict(test_set.X),
        model.predict_proba(test_set.X), dataset.class_names,
    )
    out.finish()
    print(f"test accuracy {summary['accuracy']:.4f}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# contextual model


def cmd_ctx_generate(args) -> int:
    lexicon = _load_lexicon(args.lex)
    weights = tuple(float(w) for w in args.label_weights.split(","))
    if len(weights) != 3:
        raise _UsageError("--label-weights needs three comma-separated numbers")
    sentences = ctx.generate_dataset(
        lexicon, LanguageCode.parse(args.language), args.count, args.seed,
        label_weights=weights,
    )
    out = OutputDir(args.out, _effective_config(args))
    out.write("corpus.tsv", ctx.write_corpus(sentences))
    out.finish()
    print(f"generated {len(sentences)} sentences", file=sys.stderr)
    return 0


def cmd_ctx_train(args) -> int:
    corpus = ctx.read_corpus(Path(args.corpus).read_text(encoding="utf-8"))
    train_set, val_set, test_set = ctx.split_70_20_10(corpus, args.seed)
    if args.uniform_weights:
        weights = ctx.uniform_class_weights()
    else:
        weights = ctx.compute_class_weights([s.label for s in train_set])
    config = ctx.TrainConfig(
        embedding_dim=args.embedding_dim, window=args.window, batch_size=args.batch_size
    )
    model = ctx.train(
        config, train_set, val_set, weights,
        epochs=args.epochs, learning_rate=args.learning_rate, seed=args.seed,
    )
    out = OutputDir(args.out, _effective_config(args))
    out.write("model.json", ctx.save_context_model(model))
    out.write("loss.csv", ctx.history_csv(model))
    out.write("train.tsv", ctx.write_corpus(train_set))
    out.write("validation.tsv", ctx.write_corpus(val_set))
    out.write("test.tsv", ctx.write_corpus(test_set))
    out.finish()
    val_acc = ctx.accuracy(model, val_set) if val_set else float("nan")
    print(
        f"trained {args.epochs} epochs on {len(train_set)} sentences, "
        f"validation accuracy {val_acc:.4f}",
        file=sys.stderr,
    )
    return 0


def cmd_ctx_eval(args) -> int:
    model = ctx.load_context_model(Path(args.model).read_text(encoding="utf-8"))
    corpus = ctx.read_corpus(Path(args.corpus).read_text(encoding="utf-8"))
    report, cm, curves = ctx.evaluate(model, corpus)
    out = OutputDir(args.out, _effective_config(args))
    out.write("confusion.json", _json_text(cm.to_json_dict()))
    out.write("metrics.json", _json_text(report.to_json_dict()))
    out.write("metrics.txt", evalm.metrics_table(report))
    for name, curve in sorted(curves.items()):
        rows = [["false_positive_rate", "true_positive_rate"]]
        rows += [[repr(x), repr(y)] for x, y in curve.points]
        out.write(f"roc_{name}.csv", _csv_text(rows))
    if curves:
        out.write("roc.svg", svg.roc_chart(curves, "one-vs-rest ROC"))
    out.finish()
    print(f"accuracy {report.accuracy:.4f} on {cm.total} sentences", file=sys.stderr)
    return 0


def cmd_explain(args) -> int:
    model = ctx.load_context_model(Path(args.model).read_text(encoding="utf-8"))
    if (args.text is None) == (args.corpus is None):
        raise _UsageError("provide exactly one of --text or --corpus")
    if args.text is not None:
        sentences = [ctx.parse_marked(args.text)]
    else:
        sentences = ctx.read_corpus(Path(args.corpus).read_text(encoding="utf-8"))
    target_class = Polarity(args.target_class) if args.target_class else None
    out = OutputDir(args.out, _effective_config(args))
    maps = []
    for i, sentence in enumerate(sentences, start=1):
        amap = attr.integrated_gradients(
            model, sentence, target_class=target_class, steps=args.steps,
            baseline_kind=args.baseline, scheme=args.scheme,
        )
        maps.append(amap)
        stem = f"attribution_{i:04d}" if len(sentences) > 1 else "attribution"
        out.write(f"{stem}.json", attr.attribution_json(amap))
        out.write(f"{stem}.csv", attr.heatmap_csv(amap))
        out.write(f"{stem}.svg", attr.heatmap_svg(amap))
    out.write("summary.csv", _csv_text(attr.summary_rows(maps)))
    out.finish()
    print(f"attributed {len(maps)} sentence(s)", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> _Parser:
    parser = _Parser(prog="lexisent", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    def add(name, func, parent, **kwargs):
        p = parent.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--threads", type=int, default=1,
                       help="cap on internal parallelism (recorded; single-threaded)")
        return p

    lex = sub.add_parser("lexicon", help="validate, clean, or summarize a lexicon")
    lex_sub = lex.add_subparsers(dest="subcommand")
    p = add("validate", cmd_lexicon_validate, lex_sub)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)
    p = add("clean", cmd_lexicon_clean, lex_sub)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p = add("stats", cmd_lexicon_stats, lex_sub)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)

    p = add("translate", cmd_translate, sub, help="word-by-word translation")
    p.add_argument("--lex", required=True)
    p.add_argument("--text", default=None)
    p.add_argument("--from", dest="source", default=None)
    p.add_argument("--to", dest="target", default=None)
    p.add_argument("--in", dest="infile", default=None,
                   help="CSV sentence,source_language,target_language")
    p.add_argument("--out", default=None)

    for name, func in (("score", cmd_score), ("compare", cmd_compare)):
        p = add(name, func, sub, help="sentence scoring against the baseline")
        p.add_argument("--lex", required=True)
        p.add_argument("--in", dest="infile", required=True, help="CSV sentence,language")
        p.add_argument("--out", required=True)
        p.add_argument("--mode", choices=[m.value for m in scoring.ScoreMode], default="v2")
        p.add_argument("--baseline", choices=("builtin", "zero"), default="builtin")

    mlp = sub.add_parser("ml", help="classical classifiers on lexicon features")
    ml_sub = mlp.add_subparsers(dest="subcommand")
    p = add("train", cmd_ml_train, ml_sub)
    p.add_argument("--lex", required=True)
    p.add_argument("--task", choices=ml.dataset.TASKS if hasattr(ml, "dataset") else ("pos", "polarity"), default="pos")
    p.add_argument("--model", choices=MODEL_KINDS, default="random_forest")
    p.add_argument("--out", required=True)
    p.add_argument("--train-fraction", type=float, default=0.8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-depth", type=int, default=12)
    p.add_argument("--min-samples-split", type=int, default=2)
    p.add_argument("--n-trees", type=int, default=100)
    p.add_argument("--no-bootstrap", action="store_true")
    p.add_argument("--no-feature-subsample", action="store_true")
    p.add_argument("--var-smoothing", type=float, default=1e-9)
    p.add_argument("--lam", type=float, default=1e-4)
    p.add_argument("--epochs", type=int, default=50)
    p = add("eval", cmd_ml_eval, ml_sub)
    p.add_argument("--model", required=True)
    p.add_argument("--lex", required=True)
    p.add_argument("--task", choices=("pos", "polarity"), default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--train-fraction", type=float, default=0.8)
    p.add_argument("--seed", type=int, default=0)

    ctxp = sub.add_parser("ctx", help="contextual target-word classifier")
    ctx_sub = ctxp.add_subparsers(dest="subcommand")
    p = add("generate", cmd_ctx_generate, ctx_sub)
    p.add_argument("--lex", required=True)
    p.add_argument("--language", required=True)
    p.add_argument("-n", "--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--label-weights", default="0.4,0.2,0.4",
                   help="negative,neutral,positive sampling weights")
    p.add_argument("--out", required=True)
    p = add("train", cmd_ctx_train, ctx_sub)
    p.add_argument("--corpus", required=True, help="TSV marked_sentence<TAB>label")
    p.add_argument("--out", required=True)
    p.add_argument("--epochs", type=int, default=30)
    p.add_argument("--learning-rate", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--embedding-dim", type=int, default=32)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--uniform-weights", action="store_true",
                   help="disable inverse-frequency class weighting")
    p = add("eval", cmd_ctx_eval, ctx_sub)
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)

    p = add("explain", cmd_explain, sub, help="integrated-gradients attributions")
    p.add_argument("--model", required=True)
    p.add_argument("--text", default=None, help="one marked sentence")
    p.add_argument("--corpus", default=None, help="TSV corpus to attribute in batch")
    p.add_argument("--out", required=True)
    p.add_argument("--steps", type=int, default=attr.DEFAULT_STEPS)
    p.add_argument("--baseline", choices=attr.BASELINE_KINDS, default="zero")
    p.add_argument("--scheme", choices=attr.SCHEMES, default=attr.DEFAULT_SCHEME)
    p.add_argument("--target-class", choices=[pol.value for pol in Polarity], default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (LexiconFormatError, ctx.MarkupError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
