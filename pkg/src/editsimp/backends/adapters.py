"""Adapters wrapping trained models behind the backend contracts.

Nothing here is needed by the test suite. Heavy dependencies (``torch``,
``transformers``, ``sentence_transformers``, a constituency parser) are
imported when an adapter is constructed, never at module import.

Expected models: sequence classifiers that can return attentions for
simplicity and acceptability, a sentence-embedding model, an encoder-decoder
generator for paraphrasing (negative constraints are passed as
``bad_words_ids``), and any parser producing Penn-style bracketed trees.
"""

from __future__ import annotations

import numpy as np

from ..core import Sentence, split_tokens
from ..errors import BackendError, UnsatisfiableConstraintError
from .base import AttentionTensor, Backends, SimplicityJudgment
from .trees import project, read_bracketed


def _require(module: str):
    import importlib

    try:
        return importlib.import_module(module)
    except ImportError as exc:
        raise BackendError(f"adapter needs the optional dependency {module!r}: {exc}") from None


class _HFClassifier:
    thread_safe = False

    def __init__(self, model_name: str, positive_label: int = 1, device: str = "cpu"):
        transformers = _require("transformers")
        self.torch = _require("torch")
        self.tokenizer = transformers.AutoTokenizer.from_pretrained(model_name)
        self.model = transformers.AutoModelForSequenceClassification.from_pretrained(
            model_name, output_attentions=True).to(device).eval()
        self.positive_label = positive_label
        self.device = device
        self.version = model_name

    def _run(self, s: Sentence):
        enc = self.tokenizer(list(s.tokens), is_split_into_words=True, return_tensors="pt",
                             truncation=True).to(self.device)
        with self.torch.no_grad():
            out = self.model(**enc)
        prob = self.torch.softmax(out.logits[0], dim=-1)[self.positive_label].item()
        return enc, out, prob


class HFSimplicityClassifier(_HFClassifier):
    """Complex/simple classifier; attention read from ``layer`` (second layer by default)."""

    def __init__(self, model_name: str, positive_label: int = 1, layer: int = 1, device: str = "cpu"):
        super().__init__(model_name, positive_label, device)
        self.layer = layer

    def classify_simplicity(self, s: Sentence) -> SimplicityJudgment:
        enc, out, prob = self._run(s)
        cls_row = out.attentions[self.layer][0, :, 0, :].cpu().numpy()  # heads x seq
        word_ids = enc.word_ids(0)
        keep = [j for j, w in enumerate(word_ids) if w is not None]
        if not keep:
            raise BackendError("classifier produced no content subtokens", sentence_id=s.id)
        weights = np.asarray(cls_row[:, keep], dtype=float)
        return SimplicityJudgment(prob, AttentionTensor(weights, tuple(word_ids[j] for j in keep)))


class HFAcceptabilityClassifier(_HFClassifier):
    def classify_acceptability(self, s: Sentence) -> float:
        return self._run(s)[2]


class SentenceTransformerEmbedder:
    thread_safe = False

    def __init__(self, model_name: str = "paraphrase-mpnet-base-v2", device: str = "cpu"):
        st = _require("sentence_transformers")
        self.model = st.SentenceTransformer(model_name, device=device)
        self.version = model_name

    def embed(self, s: Sentence) -> np.ndarray:
        return np.asarray(self.model.encode(s.text), dtype=float)


class ConstrainedParaphraser:
    """Beam search with the constrained words banned via ``bad_words_ids``."""

    thread_safe = False

    def __init__(self, model_name: str, num_beams: int = 5, max_length: int = 128, device: str = "cpu"):
        transformers = _require("transformers")
        self.torch = _require("torch")
        self.tokenizer = transformers.AutoTokenizer.from_pretrained(model_name)
        self.model = transformers.AutoModelForSeq2SeqLM.from_pretrained(model_name).to(device).eval()
        self.num_beams = num_beams
        self.max_length = max_length
        self.device = device
        self.version = model_name

    def _banned(self, words):
        ids = []
        for w in words:
            for variant in (w, " " + w, w.capitalize(), " " + w.capitalize()):
                toks = self.tokenizer(variant, add_special_tokens=False).input_ids
                if toks and toks not in ids:
                    ids.append(toks)
        return ids

    def paraphrase(self, s: Sentence, negative_constraints) -> Sentence:
        enc = self.tokenizer(s.text, return_tensors="pt").to(self.device)
        kwargs = dict(num_beams=self.num_beams, max_length=self.max_length, do_sample=False)
        banned = self._banned(sorted(negative_constraints))
        if banned:
            kwargs["bad_words_ids"] = banned
        with self.torch.no_grad():
            out = self.model.generate(**enc, **kwargs)
        text = self.tokenizer.decode(out[0], skip_special_tokens=True).strip()
        tokens = split_tokens(text)
        if not tokens or {t.lower() for t in tokens} & set(negative_constraints):
            raise UnsatisfiableConstraintError("decoder could not avoid the constraints", sentence_id=s.id)
        return Sentence.from_tokens(tokens, id=s.id)


class BeneparParser:
    """Constituency parsing through spaCy + benepar, projected onto engine tokens."""

    thread_safe = False

    def __init__(self, spacy_model: str = "en_core_web_sm", benepar_model: str = "benepar_en3"):
        spacy = _require("spacy")
        _require("benepar")
        self.nlp = spacy.load(spacy_model)
        self.nlp.add_pipe("benepar", config={"model": benepar_model})
        self.version = f"{spacy_model}+{benepar_model}"

    def parse_constituents(self, s: Sentence):
        doc = self.nlp(s.text)
        sents = list(doc.sents)
        if len(sents) != 1:
            bracketed = "(ROOT " + " ".join(x._.parse_string for x in sents) + ")"
        else:
            bracketed = sents[0]._.parse_string
        root, leaves = read_bracketed(bracketed)
        spans = project(root, leaves, s.tokens)
        if spans is None:
            raise BackendError("parser tokens do not align with the sentence", sentence_id=s.id)
        return spans


def adapter_backends(simplicity: str, acceptability: str, paraphraser: str,
                     embedder: str = "paraphrase-mpnet-base-v2", parser: str = "benepar_en3",
                     device: str = "cpu") -> Backends:
    return Backends(
        simplicity=HFSimplicityClassifier(simplicity, device=device),
        acceptability=HFAcceptabilityClassifier(acceptability, device=device),
        embedder=SentenceTransformerEmbedder(embedder, device=device),
        paraphraser=ConstrainedParaphraser(paraphraser, device=device),
        parser=BeneparParser(benepar_model=parser),
        name="adapter",
    )
