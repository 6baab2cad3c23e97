"""Feature hashing for text: the hashing trick and additive hashing."""

from featurehash.addhash import AhAccumulator, RandomizerConfig, ah_encode, ah_update, randomize
from featurehash.classify import MetricsReport, VectorIndex, nn_classify, spam_metrics
from featurehash.hashtrick import HashTrickConfig, ht_encode, murmur32_signed
from featurehash.textseg import TokenizerSpec, char_ngrams, tokenize_normalized, tokenize_words
from featurehash.vecspace import FeatureVector, cosine, l2_normalize, orthogonality_stats

__all__ = [
    "AhAccumulator",
    "FeatureVector",
    "HashTrickConfig",
    "MetricsReport",
    "RandomizerConfig",
    "TokenizerSpec",
    "VectorIndex",
    "ah_encode",
    "ah_update",
    "char_ngrams",
    "cosine",
    "ht_encode",
    "l2_normalize",
    "murmur32_signed",
    "nn_classify",
    "orthogonality_stats",
    "randomize",
    "spam_metrics",
    "tokenize_normalized",
    "tokenize_words",
]

__version__ = "0.1.0"
