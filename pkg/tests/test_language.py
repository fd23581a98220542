import math

import numpy as np
import pytest

from lcms.language import (
    DimensionMismatch,
    Lexicon,
    MalformedLine,
    NoDistinguisher,
    Sentence,
    build_embeddings,
    count_surface_forms,
    default_lexicon,
    distinguishing_attribute_sets,
    embed_sentence,
    enumerate_sentences,
    fallback_vector,
    generate_sentence,
    grammar_vocabulary,
    lexicon_from_json,
    lexicon_to_json,
    load_embeddings,
    tokenize,
)
from lcms.simulator import sample_scene
from lcms.simulator.scene import Scene, SceneObject


def closed_form_count(lex: Lexicon) -> int:
    """Independent combinatorial count of distinct command strings."""
    pools = {
        "color": sum(len(v) for v in lex.colors.values()),
        "shape": sum(len(v) for v in lex.shapes.values()),
        "size": sum(len(v) for v in lex.sizes.values()),
    }
    phrases = 0
    attrs = tuple(pools)
    for r in (1, 2, 3):
        import itertools

        for combo in itertools.combinations(attrs, r):
            product = 1
            for a in combo:
                product *= pools[a]
            phrases += math.factorial(r) * product
    return phrases * len(lex.nouns) * len(lex.templates) * len(lex.prefixes)


class TestGrammar:
    def test_count_matches_closed_form(self):
        lex = default_lexicon()
        assert count_surface_forms(lex) == closed_form_count(lex)

    def test_count_value(self):
        assert count_surface_forms(default_lexicon()) == 295_920

    def test_enumeration_has_no_duplicates(self):
        lex = default_lexicon()
        sentences = list(enumerate_sentences(lex))
        assert len(sentences) == len(set(sentences))

    def test_tiny_lexicon_enumeration(self):
        lex = Lexicon(
            colors={"red": ("red",)},
            sizes={"small": ("small",)},
            shapes={"round": ("round",)},
            nouns=("bowl",),
            templates=("go to the {ATTR} {NOUN}",),
            prefixes=("",),
        )
        # combos: 3 singletons + 3 ordered pairs x 2 orders + 1 triple x 6 orders
        assert count_surface_forms(lex) == 3 + 6 + 6
        assert "go to the red bowl" in set(enumerate_sentences(lex))

    def test_validate_rejects_ambiguous_surface(self):
        with pytest.raises(ValueError):
            Lexicon(
                colors={"red": ("red",), "green": ("red",)},
                sizes={"small": ("small",)},
                shapes={"round": ("round",)},
                nouns=("bowl",),
                templates=("go to the {ATTR} {NOUN}",),
                prefixes=("",),
            ).validate()

    def test_validate_rejects_template_without_slot(self):
        with pytest.raises(ValueError):
            Lexicon(
                colors={"red": ("red",)},
                sizes={"small": ("small",)},
                shapes={"round": ("round",)},
                nouns=("bowl",),
                templates=("go to the bowl",),
                prefixes=("",),
            ).validate()

    def test_lexicon_json_roundtrip(self):
        lex = default_lexicon()
        assert lexicon_from_json(lexicon_to_json(lex)) == lex


class TestGeneration:
    def test_deterministic(self):
        scene = sample_scene(5, 4, ("color",))
        assert generate_sentence(scene, 99).text == generate_sentence(scene, 99).text

    def test_generated_sentences_are_in_grammar(self):
        lex = default_lexicon()
        grammar = set(enumerate_sentences(lex))
        for i in range(200):
            scene = sample_scene(i, 4, ("color",))
            assert generate_sentence(scene, i, lex).text in grammar

    def test_mentions_exactly_the_required_attribute(self):
        lex = default_lexicon()
        for i in range(100):
            scene = sample_scene(i, 4, ("size",))
            s = generate_sentence(scene, i, lex)
            assert s.provenance["subset"] == ["size"]
            target = scene.target
            tokens = set(tokenize(s))
            assert tokens & set(lex.synonyms("size", target.size))
            # no color or shape surface form appears
            assert not tokens & set(lex.surfaces("color"))
            assert not tokens & set(lex.surfaces("shape"))

    def test_synonym_coverage(self):
        # over many seeds every synonym of the target color appears
        scene = sample_scene(8, 4, ("color",))
        lex = default_lexicon()
        used = set()
        for seed in range(300):
            used.update(set(tokenize(generate_sentence(scene, seed, lex))))
        assert set(lex.synonyms("color", scene.target.color)) <= used

    def test_no_distinguisher_raises(self):
        bowls = tuple(
            SceneObject(kind="bowl", color="red", shape="round", size="large", x=x, y=0.3)
            for x in (-0.3, 0.0, 0.3)
        )
        scene = Scene(bowls=bowls, cube_xy=(0.0, 0.08), target_index=0, seed=0)
        with pytest.raises(NoDistinguisher):
            distinguishing_attribute_sets(scene)
        with pytest.raises(NoDistinguisher):
            generate_sentence(scene, 0)


class TestTokenize:
    def test_basic(self):
        assert tokenize("Please, move towards the Blue bowl!") == [
            "please",
            "move",
            "towards",
            "the",
            "blue",
            "bowl",
        ]

    def test_sentence_object(self):
        assert tokenize(Sentence(text="go to the red dish.")) == ["go", "to", "the", "red", "dish"]

    def test_empty(self):
        assert tokenize("  .,!?  ") == []


class TestEmbeddings:
    def test_fallback_is_deterministic_unit_vector(self):
        v1 = fallback_vector("bowl", 50)
        v2 = fallback_vector("bowl", 50)
        assert np.array_equal(v1, v2)
        assert np.isclose(np.linalg.norm(v1), 1.0)
        assert not np.array_equal(v1, fallback_vector("dish", 50))

    def test_grammar_vocabulary_covers_generated_tokens(self):
        lex = default_lexicon()
        vocab = grammar_vocabulary(lex)
        for i in range(50):
            scene = sample_scene(i, 4, ("color",))
            assert set(tokenize(generate_sentence(scene, i, lex))) <= vocab

    def test_embed_shape_and_padding(self):
        table = build_embeddings({"red", "bowl"}, 50)
        W = embed_sentence(["red", "bowl"], table, 15)
        assert W.shape == (15, 50)
        assert np.array_equal(W[0], table.vectors["red"])
        assert np.all(W[2:] == 0.0)

    def test_unknown_token_maps_to_zero(self):
        table = build_embeddings({"red"}, 50)
        W = embed_sentence(["zorp"], table, 15)
        assert np.all(W == 0.0)

    def test_overlong_sentence_truncates_with_warning(self):
        table = build_embeddings({"red"}, 8)
        with pytest.warns(UserWarning):
            W = embed_sentence(["red"] * 20, table, 15)
        assert W.shape == (15, 8)

    def test_load_embeddings_file(self, tmp_path):
        path = tmp_path / "vectors.txt"
        dim = 4
        path.write_text("red 1 0 0 0\nblue 0 1 0 0\nunrelated 9 9 9 9\n")
        table = load_embeddings(path, {"red", "blue", "bowl"}, dim)
        assert np.array_equal(table.lookup("red"), [1, 0, 0, 0])
        assert np.array_equal(table.lookup("blue"), [0, 1, 0, 0])
        assert table.lookup("unrelated") is None
        assert np.array_equal(table.lookup("bowl"), fallback_vector("bowl", dim))

    def test_load_embeddings_malformed_line(self, tmp_path):
        path = tmp_path / "vectors.txt"
        path.write_text("red 1 0 0 0\nblue x y z w\n")
        with pytest.raises(MalformedLine) as exc_info:
            load_embeddings(path, {"red"}, 4)
        assert exc_info.value.line_no == 2

    def test_load_embeddings_dimension_mismatch(self, tmp_path):
        path = tmp_path / "vectors.txt"
        path.write_text("red 1 0 0\n")
        with pytest.raises(DimensionMismatch) as exc_info:
            load_embeddings(path, {"red"}, 4)
        assert exc_info.value.line_no == 1
