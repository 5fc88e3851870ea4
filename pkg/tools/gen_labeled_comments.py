"""Regenerate fixtures/labeled_comments.csv.

300 comments with ground-truth labels: 286 spam and 14 legit, so the
corpus spam fraction is exactly 95.33%.  Spam rows are either pattern
matches (any latency) or mention-plus-immediacy cases (an ``@`` handle
with latency at or below 120 s).  Legit rows carry praise text with no
pattern substring and no mention.
"""

from __future__ import annotations

import csv
import pathlib

OUT = (
    pathlib.Path(__file__).resolve().parents[1]
    / "src"
    / "honeysim"
    / "fixtures"
    / "labeled_comments.csv"
)

PATTERN_TEMPLATES = [
    ("Hey send pic to our page", "send pic"),
    ("Nice! DM us for a feature", "dm us"),
    ("Gorgeous, DM me now", "dm me"),
    ("check my page for more like this", "check my page"),
    ("Pls check my profile", "check my profile"),
    ("check our page for daily deals", "check our page"),
    ("Get free followers today", "free followers"),
    ("New drop, link in bio", "link in bio"),
    ("click the link to win", "click the link"),
    ("visit my page for promo codes", "visit my page"),
    ("follow back please", "follow back"),
    ("Huge promo this week only", "promo"),
    ("Send it to my cash app", "cash app"),
    ("You could win a prize, enter now", "win a prize"),
    ("Limited stock, buy now", "buy now"),
]

MENTION_TEXTS = [
    "@{h} look at this",
    "@{h} you would love this page",
    "wow @{h} check this out",
    "@{h} @{h2} see this",
    "this reminds me of @{h}",
    "@{h} come see",
]

HANDLES = [
    "style_daily", "urban.vibes", "gooddeals4u", "trendwatch", "sunnyfeed",
    "bestclips", "dailymood", "citylights", "fastpages", "viewbooster",
]

LEGIT_TEXTS = [
    "So pretty!",
    "Love this!",
    "Amazing shot, the colors are perfect",
    "This is beautiful",
    "Wow, stunning composition",
    "Great picture, well done",
    "Absolutely gorgeous",
    "This made my day",
    "Incredible lighting here",
    "So cool, where was this taken?",
    "Love the mood in this one",
    "What a view, thanks for sharing",
    "Such a sweet photo",
    "One of your best posts yet",
]


def main() -> None:
    rows: list[tuple[str, int, str]] = []

    # 200 pattern-based spam rows with varied latencies.
    i = 0
    while len(rows) < 200:
        base, _ = PATTERN_TEMPLATES[i % len(PATTERN_TEMPLATES)]
        suffix = f" #{i}" if i >= len(PATTERN_TEMPLATES) else ""
        latency = 40 + (i * 37) % 3600
        rows.append((base + suffix, latency, "spam"))
        i += 1

    # 86 mention + immediacy spam rows (no pattern substring).
    j = 0
    while len(rows) < 286:
        tpl = MENTION_TEXTS[j % len(MENTION_TEXTS)]
        text = tpl.format(h=HANDLES[j % len(HANDLES)], h2=HANDLES[(j + 3) % len(HANDLES)])
        if j >= len(MENTION_TEXTS):
            text += f" ({j})"
        latency = 5 + (j * 7) % 116
        assert latency <= 120
        rows.append((text, latency, "spam"))
        j += 1

    # 14 legit rows: no mention, no pattern, latency above immediacy.
    for k, text in enumerate(LEGIT_TEXTS):
        rows.append((text, 300 + 60 * k, "legit"))

    assert len(rows) == 300
    assert sum(1 for _, _, lab in rows if lab == "spam") == 286

    with OUT.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["text", "latency_seconds", "label"])
        writer.writerows(rows)
    print(f"wrote {OUT} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
