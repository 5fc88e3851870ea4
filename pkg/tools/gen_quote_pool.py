"""Regenerate fixtures/quotes.tsv (1665 entries, text<TAB>author).

A small set of classic aphorisms is padded with deterministically
composed motivational lines so the pool reaches the documented size
while every entry stays unique.
"""

from __future__ import annotations

import itertools
import pathlib

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "honeysim" / "fixtures" / "quotes.tsv"

CLASSICS = [
    ("Stay hungry, stay foolish", "Steve Jobs"),
    ("The only way to do great work is to love what you do", "Steve Jobs"),
    ("Life is what happens when you are busy making other plans", "John Lennon"),
    ("The journey of a thousand miles begins with one step", "Lao Tzu"),
    ("That which does not kill us makes us stronger", "Friedrich Nietzsche"),
    ("Be yourself; everyone else is already taken", "Oscar Wilde"),
    ("We are what we repeatedly do", "Aristotle"),
    ("The unexamined life is not worth living", "Socrates"),
    ("Whatever you are, be a good one", "Abraham Lincoln"),
    ("Imagination is more important than knowledge", "Albert Einstein"),
    ("It always seems impossible until it is done", "Nelson Mandela"),
    ("Well done is better than well said", "Benjamin Franklin"),
    ("What we think, we become", "Buddha"),
    ("No one can make you feel inferior without your consent", "Eleanor Roosevelt"),
    ("The best revenge is massive success", "Frank Sinatra"),
    ("If you tell the truth, you do not have to remember anything", "Mark Twain"),
    ("A room without books is like a body without a soul", "Cicero"),
    ("To live is the rarest thing in the world", "Oscar Wilde"),
    ("In the middle of difficulty lies opportunity", "Albert Einstein"),
    ("Do what you can, with what you have, where you are", "Theodore Roosevelt"),
    ("Happiness depends upon ourselves", "Aristotle"),
    ("Turn your wounds into wisdom", "Oprah Winfrey"),
    ("Whether you think you can or you think you cannot, you are right", "Henry Ford"),
    ("I have not failed, I have just found ten thousand ways that will not work", "Thomas Edison"),
    ("A person who never made a mistake never tried anything new", "Albert Einstein"),
    ("The mind is everything; what you think you become", "Buddha"),
    ("An unexamined idea is a road not taken", "Anonymous"),
    ("Fall seven times and stand up eight", "Japanese Proverb"),
    ("He who has a why to live can bear almost any how", "Friedrich Nietzsche"),
    ("The future belongs to those who believe in the beauty of their dreams", "Eleanor Roosevelt"),
]

SUBJECTS = [
    "courage", "patience", "kindness", "discipline", "curiosity", "gratitude",
    "honesty", "focus", "resilience", "humility", "wonder", "effort",
    "silence", "practice", "friendship", "hope", "balance", "purpose",
    "honor", "craft", "vision", "freedom", "learning", "laughter",
    "simplicity", "adventure", "service", "truth", "growth", "stillness",
    "generosity", "optimism",
]

OPENERS = [
    "The secret of {s} is starting before you feel ready",
    "{S} is a muscle that grows every time you use it",
    "Nothing great was ever built without {s}",
    "Where {s} leads, opportunity follows",
    "{S} turns ordinary days into extraordinary ones",
    "Every morning is a fresh invitation to {s}",
    "{S} speaks quietly, but it is heard the longest",
    "You do not find {s}; you build it one choice at a time",
    "A life shaped by {s} needs no apology",
    "{S} is the bridge between wishing and achieving",
    "Small acts of {s} outlast grand intentions",
    "Let {s} be louder than your doubts",
    "When in doubt, choose {s} over comfort",
    "The world makes room for people of {s}",
    "{S} today is freedom tomorrow",
    "Plant {s} now and shade will come later",
    "There is no elevator to {s}; take the stairs",
    "{S} is doing the right thing when nobody is watching",
    "Trade your excuses for {s} and watch what happens",
    "History belongs to the stubborn students of {s}",
    "Your future self is watching you practice {s} today",
    "Storms teach {s} that calm seas never could",
    "Make {s} a habit and luck becomes unnecessary",
    "First master {s}, then master everything else",
    "{S} is the quiet engine of every loud success",
    "Feed your {s} and starve your fear",
    "One day of {s} beats a year of waiting",
    "Begin with {s}; the path will reveal itself",
    "Great things grow slowly from daily {s}",
    "Without {s}, talent is only a rumor",
    "{S} costs nothing and buys everything",
    "The first step toward change is a step of {s}",
    "Keep your {s} closer than your comfort",
    "Even a broken road rewards {s}",
    "What {s} starts, time finishes",
    "Measure wealth in {s}, not in coins",
    "A handful of {s} outweighs a bag of talent",
    "Doors open for those who knock with {s}",
    "Let your {s} write the story fear refused to",
    "Tomorrow thanks you for today's {s}",
    "Mountains move for travelers armed with {s}",
    "Rest if you must, but never retire your {s}",
    "Luck is {s} wearing work clothes",
    "The harvest always remembers the season of {s}",
    "Quiet {s} beats loud promises",
    "Every champion was once a beginner with {s}",
    "Build your days on {s} and they will hold",
    "Only {s} can turn setbacks into setups",
    "Carry {s} like a compass, not like a trophy",
    "Age cannot rust a heart kept bright by {s}",
    "Write your plans in pencil and your {s} in ink",
    "Seeds of {s} ignore the weather of opinion",
    "A candle of {s} outshines a storm of doubt",
    "Debt-free is the mind that invests in {s}",
    "Teach your hands {s} and your mind will follow",
]

AUTHORS = [
    "A. Calloway", "B. Whitfield", "C. Marsh", "D. Okafor", "E. Lindqvist",
    "F. Herrera", "G. Tanaka", "H. Broadbent", "I. Castellano", "J. Whitmore",
    "K. Ashworth", "L. Moreau", "M. Delgado", "N. Pemberton", "O. Sandoval",
    "P. Kowalski", "Q. Fairbanks", "R. Montague", "S. Abernathy", "T. Villanueva",
    "U. Hartmann", "V. Radcliffe", "W. Sorensen", "X. Bellamy", "Y. Thackeray",
    "Z. Holloway", "A. Beaumont", "B. Sterling", "C. Winslow", "D. Farnsworth",
]


def main() -> None:
    rows: list[tuple[str, str]] = list(CLASSICS)
    seen = {t for t, _ in rows}
    combos = itertools.product(OPENERS, SUBJECTS)
    for i, (opener, subject) in enumerate(combos):
        if len(rows) >= 1665:
            break
        text = opener.format(s=subject, S=subject.capitalize())
        if text in seen:
            continue
        seen.add(text)
        rows.append((text, AUTHORS[i % len(AUTHORS)]))
    if len(rows) != 1665:
        raise SystemExit(f"pool has {len(rows)} entries, need 1665")
    OUT.write_text("".join(f"{t}\t{a}\n" for t, a in rows), encoding="utf-8")
    print(f"wrote {OUT} ({len(rows)} quotes)")


if __name__ == "__main__":
    main()
