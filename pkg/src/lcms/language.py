"""Command grammar, referring-expression generation, and sentence embedding.

The grammar is a pinned synthetic replacement for crowd-sourced templates:
10 imperative frames with an `{ATTR} {NOUN}` slot, 3 surface forms per
attribute value, 4 object nouns, and an optional politeness prefix.
Attribute phrases mention exactly one minimal distinguishing subset of the
target's attributes, in a uniformly sampled order.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import warnings
from dataclasses import dataclass, field

import numpy as np

from .simulator.scene import ATTRIBUTES, Scene
from .simulator.scene import distinguishing_subsets as _scene_distinguishing_subsets

L_S_DEFAULT = 15
L_W_DEFAULT = 50


class NoDistinguisher(Exception):
    """The scene's target cannot be singled out by any attribute subset."""


class MalformedLine(ValueError):
    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: {detail}")
        self.line_no = line_no


class DimensionMismatch(ValueError):
    def __init__(self, line_no: int, expected: int, got: int):
        super().__init__(f"line {line_no}: expected {expected} floats, got {got}")
        self.line_no = line_no


@dataclass(frozen=True)
class Lexicon:
    colors: dict[str, tuple[str, ...]]
    sizes: dict[str, tuple[str, ...]]
    shapes: dict[str, tuple[str, ...]]
    nouns: tuple[str, ...]
    templates: tuple[str, ...]  # each contains the literal "{ATTR} {NOUN}"
    prefixes: tuple[str, ...]

    def synonyms(self, attribute: str, value: str) -> tuple[str, ...]:
        return {"color": self.colors, "size": self.sizes, "shape": self.shapes}[attribute][value]

    def surfaces(self, attribute: str) -> list[str]:
        table = {"color": self.colors, "size": self.sizes, "shape": self.shapes}[attribute]
        return [s for forms in table.values() for s in forms]

    def validate(self) -> None:
        seen: dict[str, str] = {}
        for attribute in ATTRIBUTES:
            table = {"color": self.colors, "size": self.sizes, "shape": self.shapes}[attribute]
            for value, forms in table.items():
                for s in forms:
                    if s != s.lower() or not s.isascii():
                        raise ValueError(f"surface form {s!r} must be lowercase ASCII")
                    key = seen.get(s)
                    if key is not None and key != f"{attribute}:{value}":
                        raise ValueError(f"surface form {s!r} used for two attribute values")
                    seen[s] = f"{attribute}:{value}"
        for t in self.templates:
            if "{ATTR} {NOUN}" not in t:
                raise ValueError(f"template {t!r} lacks the attribute slot")


def default_lexicon() -> Lexicon:
    lex = Lexicon(
        colors={
            "red": ("red", "crimson", "scarlet"),
            "green": ("green", "emerald", "lime"),
            "blue": ("blue", "azure", "navy"),
            "yellow": ("yellow", "golden", "amber"),
            "pink": ("pink", "rose", "magenta"),
        },
        sizes={
            "small": ("small", "little", "tiny"),
            "large": ("large", "big", "huge"),
        },
        shapes={
            "round": ("round", "circular", "curved"),
            "square": ("square", "rectangular", "angular"),
        },
        nouns=("bowl", "basin", "dish", "container"),
        templates=(
            "move towards the {ATTR} {NOUN}",
            "put the cube into the {ATTR} {NOUN}",
            "place the cube in the {ATTR} {NOUN}",
            "drop the cube into the {ATTR} {NOUN}",
            "bring the cube to the {ATTR} {NOUN}",
            "move the cube into the {ATTR} {NOUN}",
            "carry the cube over to the {ATTR} {NOUN}",
            "deliver the cube to the {ATTR} {NOUN}",
            "go to the {ATTR} {NOUN}",
            "put it into the {ATTR} {NOUN}",
        ),
        prefixes=("", "please "),
    )
    lex.validate()
    return lex


def lexicon_to_json(lex: Lexicon) -> str:
    return json.dumps(
        {
            "colors": {k: list(v) for k, v in lex.colors.items()},
            "sizes": {k: list(v) for k, v in lex.sizes.items()},
            "shapes": {k: list(v) for k, v in lex.shapes.items()},
            "nouns": list(lex.nouns),
            "templates": list(lex.templates),
            "prefixes": list(lex.prefixes),
        },
        indent=2,
        sort_keys=True,
    )


def lexicon_from_json(text: str) -> Lexicon:
    doc = json.loads(text)
    lex = Lexicon(
        colors={k: tuple(v) for k, v in doc["colors"].items()},
        sizes={k: tuple(v) for k, v in doc["sizes"].items()},
        shapes={k: tuple(v) for k, v in doc["shapes"].items()},
        nouns=tuple(doc["nouns"]),
        templates=tuple(doc["templates"]),
        prefixes=tuple(doc["prefixes"]),
    )
    lex.validate()
    return lex


@dataclass(frozen=True)
class Sentence:
    text: str
    provenance: dict | None = field(default=None, compare=False)


def distinguishing_attribute_sets(scene: Scene) -> list[frozenset[str]]:
    """Minimal attribute subsets that uniquely select the scene's target."""
    sets = _scene_distinguishing_subsets(scene)
    if not sets:
        raise NoDistinguisher("target matches a distractor on every attribute")
    return sets


def _attribute_phrases(lex: Lexicon, values: dict[str, str] | None = None):
    """All word tuples over nonempty attribute subsets x orders x synonyms.

    With `values` given, only that target's attribute values are used;
    without, every value of each attribute is enumerated (for counting).
    """
    for r in (1, 2, 3):
        for combo in itertools.combinations(ATTRIBUTES, r):
            for order in itertools.permutations(combo):
                pools = []
                for attribute in order:
                    if values is None:
                        pools.append(lex.surfaces(attribute))
                    else:
                        pools.append(list(lex.synonyms(attribute, values[attribute])))
                yield from itertools.product(*pools)


def enumerate_sentences(lex: Lexicon):
    """Every generable surface string (over all possible target values)."""
    for prefix in lex.prefixes:
        for template in lex.templates:
            for noun in lex.nouns:
                for words in _attribute_phrases(lex):
                    yield prefix + template.replace("{ATTR} {NOUN}", " ".join(words) + " " + noun)


def count_surface_forms(lex: Lexicon) -> int:
    """Number of distinct generable command strings (exhaustive, de-duplicated)."""
    return len(set(enumerate_sentences(lex)))


def generate_sentence(scene: Scene, seed: int, lex: Lexicon | None = None) -> Sentence:
    """Sample a command that uniquely refers to the scene's target.

    Uniform over (minimal distinguishing subset, attribute order, synonym
    per attribute, template, noun, prefix); deterministic given the seed.
    """
    if lex is None:
        lex = default_lexicon()
    rng = np.random.default_rng(seed)
    sets = distinguishing_attribute_sets(scene)
    subset = sets[rng.integers(len(sets))]
    order = list(subset)
    rng.shuffle(order)
    target = scene.target
    words = [
        lex.synonyms(a, getattr(target, a))[rng.integers(3)]
        for a in order
    ]
    template = lex.templates[rng.integers(len(lex.templates))]
    noun = lex.nouns[rng.integers(len(lex.nouns))]
    prefix = lex.prefixes[rng.integers(len(lex.prefixes))]
    text = prefix + template.replace("{ATTR} {NOUN}", " ".join(words) + " " + noun)
    return Sentence(
        text=text,
        provenance={
            "subset": sorted(subset),
            "order": order,
            "words": words,
            "template": template,
            "noun": noun,
            "prefix": prefix,
        },
    )


def tokenize(sentence: str | Sentence) -> list[str]:
    """Lowercase, strip `.,!?`, and split on whitespace."""
    text = sentence.text if isinstance(sentence, Sentence) else sentence
    cleaned = text.lower().translate(str.maketrans("", "", ".,!?"))
    return cleaned.split()


# --- embeddings ---

@dataclass(frozen=True)
class EmbeddingTable:
    vectors: dict[str, np.ndarray]
    dim: int

    def lookup(self, token: str) -> np.ndarray | None:
        return self.vectors.get(token)


def fallback_vector(token: str, dim: int) -> np.ndarray:
    """Deterministic pseudo-random unit vector for an out-of-file token."""
    digest = hashlib.sha256(token.encode("utf-8")).digest()
    rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def grammar_vocabulary(lex: Lexicon) -> set[str]:
    vocab: set[str] = set()
    for template in lex.templates:
        vocab.update(template.replace("{ATTR} {NOUN}", "").split())
    for attribute in ATTRIBUTES:
        vocab.update(lex.surfaces(attribute))
    vocab.update(lex.nouns)
    for prefix in lex.prefixes:
        vocab.update(prefix.split())
    return vocab


def build_embeddings(vocabulary, dim: int = L_W_DEFAULT) -> EmbeddingTable:
    """Table of deterministic fallback vectors for the whole vocabulary."""
    return EmbeddingTable(
        vectors={tok: fallback_vector(tok, dim) for tok in vocabulary}, dim=dim
    )


def load_embeddings(path, vocabulary, dim: int = L_W_DEFAULT) -> EmbeddingTable:
    """Read a GloVe-style text file, restricted to the given vocabulary.

    Each line is `token v1 ... v_dim`, whitespace separated.  Vocabulary
    tokens missing from the file get the deterministic fallback vector.
    """
    vectors: dict[str, np.ndarray] = {}
    vocabulary = set(vocabulary)
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            token = parts[0]
            try:
                values = [float(v) for v in parts[1:]]
            except ValueError as exc:
                raise MalformedLine(line_no, str(exc)) from exc
            if len(values) != dim:
                raise DimensionMismatch(line_no, dim, len(values))
            if token in vocabulary:
                vectors[token] = np.asarray(values)
    for token in vocabulary - vectors.keys():
        vectors[token] = fallback_vector(token, dim)
    return EmbeddingTable(vectors=vectors, dim=dim)


def embed_sentence(tokens: list[str], table: EmbeddingTable, l_s: int = L_S_DEFAULT) -> np.ndarray:
    """Stack token vectors into a fixed-size (l_s, l_w) sentence matrix.

    Rows past the tokens are zero padding; unknown tokens map to zero.
    Overlong sentences are truncated with a warning.
    """
    if len(tokens) > l_s:
        warnings.warn(f"sentence truncated from {len(tokens)} to {l_s} tokens")
        tokens = tokens[:l_s]
    W = np.zeros((l_s, table.dim))
    for i, token in enumerate(tokens):
        v = table.lookup(token)
        if v is not None:
            W[i] = v
    return W
