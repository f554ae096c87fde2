"""Target-word contextual sentiment: marked sentences, a small differentiable
classifier over target and context embeddings, class-weighted training.

The classifier embeds every token, concatenates the target embedding with the
mean embedding of the tokens inside a window around the target, and applies a
linear layer to produce three polarity logits. All gradients (parameters and
input embeddings) are analytic, which keeps training deterministic and lets
the attribution module integrate gradients along an input path.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from . import metrics as evalm
from .lexicon import LanguageCode, Lexicon, Polarity, context_dependent_forms
from .ml.dataset import rng_for
from .translator import word_tokens

log = logging.getLogger(__name__)

TARGET_OPEN = "[TARGET]"
TARGET_CLOSE = "[/TARGET]"

#: Class order used for labels, logits, weights, and reports.
CLASS_ORDER: tuple[Polarity, ...] = (Polarity.NEGATIVE, Polarity.NEUTRAL, Polarity.POSITIVE)

SPLIT_RATIOS = (0.7, 0.2, 0.1)


class MarkupError(ValueError):
    """Malformed target markers in a sentence."""


@dataclass(frozen=True)
class TargetSentence:
    text: str
    tokens: tuple[str, ...]  # normalized words; the target phrase is one token
    target_index: int
    label: Polarity | None = None

    @property
    def target(self) -> str:
        return self.tokens[self.target_index]


def parse_marked(text: str, label: Polarity | None = None) -> TargetSentence:
    """Parse one ``[TARGET] ... [/TARGET]`` sentence.

    Exactly one marker pair is allowed and the span must be non-empty; a
    multi-word span becomes a single target token.
    """
    opens = text.count(TARGET_OPEN)
    closes = text.count(TARGET_CLOSE)
    if opens != 1 or closes != 1:
        raise MarkupError(
            f"expected exactly one {TARGET_OPEN} ... {TARGET_CLOSE} pair, "
            f"found {opens} opening and {closes} closing markers"
        )
    open_at = text.index(TARGET_OPEN)
    close_at = text.index(TARGET_CLOSE)
    if close_at < open_at:
        raise MarkupError("closing marker appears before the opening marker")
    span = text[open_at + len(TARGET_OPEN) : close_at]
    target_words = word_tokens(span)
    if not target_words:
        raise MarkupError("empty target span")
    before = word_tokens(text[:open_at])
    after = word_tokens(text[close_at + len(TARGET_CLOSE) :])
    tokens = tuple(before) + (" ".join(target_words),) + tuple(after)
    return TargetSentence(
        text=text, tokens=tokens, target_index=len(before), label=label
    )


PAD, UNK = "<pad>", "<unk>"
SPECIAL_TOKENS = (PAD, UNK, TARGET_OPEN, TARGET_CLOSE)


@dataclass(frozen=True)
class Vocabulary:
    id_to_token: tuple[str, ...]
    token_to_id: dict[str, int]

    pad_id = 0
    unknown_id = 1
    target_open_id = 2
    target_close_id = 3

    def __len__(self) -> int:
        return len(self.id_to_token)

    def encode(self, token: str) -> int:
        return self.token_to_id.get(token, self.unknown_id)


def build_vocabulary(sentences: list[TargetSentence]) -> Vocabulary:
    seen = sorted({token for s in sentences for token in s.tokens} - set(SPECIAL_TOKENS))
    id_to_token = SPECIAL_TOKENS + tuple(seen)
    return Vocabulary(id_to_token, {t: i for i, t in enumerate(id_to_token)})


def compute_class_weights(labels: list[Polarity]) -> dict[Polarity, float]:
    """Inverse-frequency weights: N / (K * n_c); absent classes weigh 0."""
    n = len(labels)
    k = len(CLASS_ORDER)
    weights = {}
    for polarity in CLASS_ORDER:
        count = sum(1 for l in labels if l is polarity)
        weights[polarity] = n / (k * count) if count else 0.0
    return weights


def uniform_class_weights() -> dict[Polarity, float]:
    return {polarity: 1.0 for polarity in CLASS_ORDER}


@dataclass
class TrainConfig:
    embedding_dim: int = 32
    window: int = 5
    batch_size: int = 32


def _largest_remainder(n: int, fractions: tuple[float, ...]) -> list[int]:
    base = [int(n * f) for f in fractions]
    remainders = [n * f - b for f, b in zip(fractions, base)]
    for _ in range(n - sum(base)):
        i = max(range(len(fractions)), key=lambda j: (remainders[j], -j))
        base[i] += 1
        remainders[i] = -1.0
    return base


def split_70_20_10(
    data: list[TargetSentence], seed: int
) -> tuple[list[TargetSentence], list[TargetSentence], list[TargetSentence]]:
    """Stratified 70:20:10 split; overall sizes match the exact ratios within
    one item, deterministic per seed, union equals the input."""
    if len(data) < 10:
        raise ValueError("need at least 10 sentences for a 70:20:10 split")
    targets = _largest_remainder(len(data), SPLIT_RATIOS)

    by_class: list[list[int]] = []
    for polarity in CLASS_ORDER:
        members = [i for i, s in enumerate(data) if s.label is polarity]
        if not members:
            log.warning("no %s sentences; splitting over the remaining classes",
                        polarity.value)
        by_class.append(members)

    alloc = [_largest_remainder(len(members), SPLIT_RATIOS) for members in by_class]
    # Nudge per-class allocations until the global sizes hit the targets.
    sums = [sum(a[p] for a in alloc) for p in range(3)]
    while sums != targets:
        src = next(p for p in range(3) if sums[p] > targets[p])
        dst = next(p for p in range(3) if sums[p] < targets[p])
        donor = max(range(len(alloc)), key=lambda c: (alloc[c][src], -c))
        alloc[donor][src] -= 1
        alloc[donor][dst] += 1
        sums[src] -= 1
        sums[dst] += 1

    rng = rng_for(seed, 70, 20, 10)
    parts: tuple[list[TargetSentence], ...] = ([], [], [])
    for members, (n_train, n_val, _) in zip(by_class, alloc):
        shuffled = [members[i] for i in rng.permutation(len(members))]
        parts[0].extend(data[i] for i in shuffled[:n_train])
        parts[1].extend(data[i] for i in shuffled[n_train : n_train + n_val])
        parts[2].extend(data[i] for i in shuffled[n_train + n_val :])
    return parts


def generate_dataset(
    lexicon: Lexicon,
    language: LanguageCode,
    n: int,
    seed: int,
    label_weights: tuple[float, float, float] = (0.4, 0.2, 0.4),
) -> list[TargetSentence]:
    """Template-generate ``n`` marked sentences around context-dependent targets.

    Each sentence places 1-3 context words on either side of the target, drawn
    from lexicon forms whose polarity (in ``language``) matches the intended
    label, so the label is recoverable from the context alone.
    ``label_weights`` orders (negative, neutral, positive).
    """
    targets = context_dependent_forms(lexicon, language)
    if not targets:
        raise ValueError(f"lexicon has no context-dependent {language.value} forms")
    pools: dict[Polarity, list[str]] = {p: [] for p in CLASS_ORDER}
    for form, ids in lexicon.index[language].items():
        polarities = {lexicon.by_id[i].polarity(language) for i in ids}
        if len(polarities) == 1:
            pools[next(iter(polarities))].append(form)
    for polarity, weight in zip(CLASS_ORDER, label_weights):
        if weight > 0 and not pools[polarity]:
            raise ValueError(
                f"no unambiguous {polarity.value} {language.value} words to build contexts"
            )
    for polarity in CLASS_ORDER:
        pools[polarity].sort()

    total = sum(label_weights)
    probabilities = [w / total for w in label_weights]
    rng = rng_for(seed, 1000)
    sentences = []
    for _ in range(n):
        k = int(rng.choice(len(CLASS_ORDER), p=probabilities))
        label = CLASS_ORDER[k]
        pool = pools[label]
        target = targets[int(rng.integers(len(targets)))]
        before = [pool[int(rng.integers(len(pool)))] for _ in range(int(rng.integers(1, 4)))]
        after = [pool[int(rng.integers(len(pool)))] for _ in range(int(rng.integers(1, 4)))]
        text = " ".join(before + [TARGET_OPEN, target, TARGET_CLOSE] + after) + "."
        sentences.append(parse_marked(text, label=label))
    return sentences


def _softmax(z: np.ndarray) -> np.ndarray:
    e = np.exp(z - z.max())
    return e / e.sum()


@dataclass
class ContextModel:
    vocabulary: Vocabulary
    embeddings: np.ndarray  # (V, E)
    weights: np.ndarray  # (2E, 3)
    bias: np.ndarray  # (3,)
    window: int
    seed: int
    hyperparameters: dict = field(default_factory=dict)
    history: list[dict] = field(default_factory=list)

    @property
    def embedding_dim(self) -> int:
        return self.embeddings.shape[1]

    def encode(self, sentence: TargetSentence) -> tuple[np.ndarray, int]:
        ids = np.array([self.vocabulary.encode(t) for t in sentence.tokens], dtype=int)
        return ids, sentence.target_index

    def window_positions(self, length: int, target_index: int) -> list[int]:
        lo = max(0, target_index - self.window)
        hi = min(length - 1, target_index + self.window)
        return [j for j in range(lo, hi + 1) if j != target_index]

    def features_from_embeddings(self, x: np.ndarray, target_index: int) -> np.ndarray:
        context = self.window_positions(len(x), target_index)
        mean = x[context].mean(axis=0) if context else np.zeros(self.embedding_dim)
        return np.concatenate([x[target_index], mean])

    def logits_from_embeddings(self, x: np.ndarray, target_index: int) -> np.ndarray:
        return self.features_from_embeddings(x, target_index) @ self.weights + self.bias

    def logits(self, sentence: TargetSentence) -> np.ndarray:
        ids, target_index = self.encode(sentence)
        return self.logits_from_embeddings(self.embeddings[ids], target_index)

    def predict_proba(self, sentence: TargetSentence) -> np.ndarray:
        return _softmax(self.logits(sentence))

    def predict(self, sentence: TargetSentence) -> Polarity:
        return CLASS_ORDER[int(np.argmax(self.predict_proba(sentence)))]

    def predict_batch(self, sentences: list[TargetSentence]) -> tuple[np.ndarray, np.ndarray]:
        proba = np.stack([self.predict_proba(s) for s in sentences])
        return np.argmax(proba, axis=1), proba

    def log_prob_and_input_grad(
        self, x: np.ndarray, target_index: int, class_index: int
    ) -> tuple[float, np.ndarray]:
        """Log-probability of a class and its gradient w.r.t. the input
        embedding matrix ``x`` (T, E). Model parameters are untouched."""
        z = self.logits_from_embeddings(x, target_index)
        p = _softmax(z)
        value = float(z[class_index] - _log_sum_exp(z))
        dz = -p
        dz[class_index] += 1.0
        dh = self.weights @ dz  # (2E,)
        grad = np.zeros_like(x)
        e = self.embedding_dim
        grad[target_index] += dh[:e]
        context = self.window_positions(len(x), target_index)
        if context:
            grad[context] += dh[e:] / len(context)
        return value, grad


def _log_sum_exp(z: np.ndarray) -> float:
    m = float(z.max())
    return m + math.log(float(np.exp(z - m).sum()))


def loss_and_gradients(
    model: ContextModel,
    batch: list[tuple[np.ndarray, int, int]],
    weight_vector: np.ndarray,
) -> tuple[float, dict[str, np.ndarray]]:
    """Mean class-weighted cross-entropy over a batch, plus analytic gradients.

    The batch holds (token ids, target index, label index) triples. With all
    weights 1 this is exactly the unweighted mean cross-entropy.
    """
    grads = {
        "embeddings": np.zeros_like(model.embeddings),
        "weights": np.zeros_like(model.weights),
        "bias": np.zeros_like(model.bias),
    }
    e = model.embedding_dim
    total = 0.0
    scale = 1.0 / len(batch)
    for ids, target_index, label in batch:
        x = model.embeddings[ids]
        h = model.features_from_embeddings(x, target_index)
        z = h @ model.weights + model.bias
        log_z = _log_sum_exp(z)
        w = weight_vector[label]
        total += w * (log_z - float(z[label]))

        dz = _softmax(z)
        dz[label] -= 1.0
        dz *= w * scale
        grads["weights"] += np.outer(h, dz)
        grads["bias"] += dz
        dh = model.weights @ dz
        grads["embeddings"][ids[target_index]] += dh[:e]
        context = model.window_positions(len(ids), target_index)
        if context:
            share = dh[e:] / len(context)
            for j in context:
                grads["embeddings"][ids[j]] += share
    return total * scale, grads


def _weight_vector(class_weights: dict[Polarity, float]) -> np.ndarray:
    return np.array([class_weights[p] for p in CLASS_ORDER], dtype=float)


def _encode_all(model: ContextModel, sentences: list[TargetSentence]):
    encoded = []
    for s in sentences:
        if s.label is None:
            raise ValueError(f"unlabeled sentence: {s.text!r}")
        ids, target_index = model.encode(s)
        encoded.append((ids, target_index, CLASS_ORDER.index(s.label)))
    return encoded


def train(
    config: TrainConfig,
    train_set: list[TargetSentence],
    val_set: list[TargetSentence],
    class_weights: dict[Polarity, float],
    epochs: int,
    learning_rate: float,
    seed: int,
) -> ContextModel:
    """Mini-batch gradient descent on the weighted cross-entropy.

    The vocabulary comes from the training set; per-epoch train/validation
    losses land in ``model.history``. Fully deterministic per seed.
    """
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    if not train_set:
        raise ValueError("training set is empty")
    vocabulary = build_vocabulary(train_set)
    rng = rng_for(seed, 7)
    model = ContextModel(
        vocabulary=vocabulary,
        embeddings=rng.normal(0.0, 0.1, size=(len(vocabulary), config.embedding_dim)),
        weights=np.zeros((2 * config.embedding_dim, len(CLASS_ORDER))),
        bias=np.zeros(len(CLASS_ORDER)),
        window=config.window,
        seed=seed,
        hyperparameters={
            "embedding_dim": config.embedding_dim,
            "window": config.window,
            "batch_size": config.batch_size,
            "epochs": epochs,
            "learning_rate": learning_rate,
            "class_weights": {p.value: class_weights[p] for p in CLASS_ORDER},
        },
    )
    weight_vector = _weight_vector(class_weights)
    encoded_train = _encode_all(model, train_set)
    encoded_val = _encode_all(model, val_set) if val_set else []

    for epoch in range(1, epochs + 1):
        order = rng.permutation(len(encoded_train))
        for start in range(0, len(order), config.batch_size):
            batch = [encoded_train[i] for i in order[start : start + config.batch_size]]
            _, grads = loss_and_gradients(model, batch, weight_vector)
            model.embeddings -= learning_rate * grads["embeddings"]
            model.weights -= learning_rate * grads["weights"]
            model.bias -= learning_rate * grads["bias"]
        train_loss, _ = loss_and_gradients(model, encoded_train, weight_vector)
        record = {"epoch": epoch, "train_loss": train_loss, "val_loss": None}
        if encoded_val:
            record["val_loss"], _ = loss_and_gradients(model, encoded_val, weight_vector)
        model.history.append(record)
    return model


def evaluate(
    model: ContextModel, test_set: list[TargetSentence]
) -> tuple[evalm.MetricsReport, evalm.ConfusionMatrix, dict[str, evalm.RocCurve]]:
    """Metrics, confusion matrix, and one-vs-rest ROC curves on labeled data."""
    if not test_set:
        raise ValueError("test set is empty")
    y_true = []
    for s in test_set:
        if s.label is None:
            raise ValueError(f"unlabeled sentence: {s.text!r}")
        y_true.append(CLASS_ORDER.index(s.label))
    preds, proba = model.predict_batch(test_set)
    names = [p.value for p in CLASS_ORDER]
    cm = evalm.confusion(
        [names[t] for t in y_true], [names[int(p)] for p in preds], names
    )
    report = evalm.metrics(cm)
    curves = evalm.roc_one_vs_rest(y_true, proba, names)
    return report, cm, curves


def accuracy(model: ContextModel, sentences: list[TargetSentence]) -> float:
    preds, _ = model.predict_batch(sentences)
    truth = np.array([CLASS_ORDER.index(s.label) for s in sentences])
    return float(np.mean(preds == truth))


# ---------------------------------------------------------------------------
# file formats


def write_corpus(sentences: list[TargetSentence]) -> str:
    """TSV with one ``marked_sentence<TAB>label`` line per sentence."""
    lines = []
    for s in sentences:
        if "\t" in s.text or "\n" in s.text:
            raise ValueError("marked sentences must not contain tabs or newlines")
        label = s.label.value if s.label is not None else ""
        lines.append(f"{s.text}\t{label}")
    return "\n".join(lines) + ("\n" if lines else "")


def read_corpus(text: str) -> list[TargetSentence]:
    sentences = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            marked, label_text = line.split("\t")
        except ValueError:
            raise ValueError(f"line {line_no}: expected 'sentence<TAB>label'") from None
        label = Polarity(label_text) if label_text else None
        sentences.append(parse_marked(marked, label=label))
    return sentences


def history_csv(model: ContextModel) -> str:
    lines = ["epoch,train_loss,val_loss"]
    for row in model.history:
        val = "" if row["val_loss"] is None else repr(row["val_loss"])
        lines.append(f"{row['epoch']},{repr(row['train_loss'])},{val}")
    return "\n".join(lines) + "\n"


MODEL_FORMAT_VERSION = 1


def save_context_model(model: ContextModel) -> str:
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "vocabulary": list(model.vocabulary.id_to_token),
        "embeddings": model.embeddings.tolist(),
        "weights": model.weights.tolist(),
        "bias": model.bias.tolist(),
        "window": model.window,
        "seed": model.seed,
        "hyperparameters": model.hyperparameters,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def load_context_model(text: str) -> ContextModel:
    data = json.loads(text)
    if data.get("format_version") != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format version {data.get('format_version')!r}")
    id_to_token = tuple(data["vocabulary"])
    vocabulary = Vocabulary(id_to_token, {t: i for i, t in enumerate(id_to_token)})
    return ContextModel(
        vocabulary=vocabulary,
        embeddings=np.asarray(data["embeddings"], dtype=float),
        weights=np.asarray(data["weights"], dtype=float),
        bias=np.asarray(data["bias"], dtype=float),
        window=data["window"],
        seed=data["seed"],
        hyperparameters=data["hyperparameters"],
    )
