"""Small generated corpora shaped like the real SMS and WiLI files."""

import numpy as np

HAM_WORDS = "ok see you later at home call me when done thanks love dinner tonight going bus".split()
SPAM_WORDS = "free win prize claim cash urgent txt now reply award guaranteed 150p mobile offer".split()

ALPHABETS = {
    "aaa": "abcdefg ",
    "bbb": "hijklmn ",
    "ccc": "opqrstu ",
    "ddd": "vwxyzäö ",
}


def write_sms(path, n=200, spam_fraction=0.15, seed=0):
    rng = np.random.default_rng(seed)
    lines = []
    for _ in range(n):
        spam = rng.random() < spam_fraction
        words = rng.choice(SPAM_WORDS if spam else HAM_WORDS, size=int(rng.integers(4, 12)))
        lines.append(("spam" if spam else "ham") + "\t" + " ".join(words))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def write_wili(root, per_class=30, seed=0):
    rng = np.random.default_rng(seed)
    root.mkdir(parents=True, exist_ok=True)
    for split in ("train", "test"):
        xs, ys = [], []
        for _ in range(per_class):
            for label, alphabet in ALPHABETS.items():
                xs.append("".join(rng.choice(list(alphabet), size=80)))
                ys.append(label)
        (root / f"x_{split}.txt").write_text("\n".join(xs) + "\n", encoding="utf-8")
        (root / f"y_{split}.txt").write_text("\n".join(ys) + "\n", encoding="utf-8")
    return root
