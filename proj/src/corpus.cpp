#include "skein/corpus.hpp"

#include <algorithm>
#include <array>

namespace skein {

namespace {

// PD codes below are braid closures (see braid_closure) except where noted.
constexpr std::array kCorpus{
    CorpusEntry{"unknot", "loops 1\n", 1, "crossing-free circle", ""},
    CorpusEntry{"unknot-kink-positive", "Xr 1 1 2 2\n", 1, "one positive Reidemeister-1 curl, by hand", ""},
    CorpusEntry{"unknot-kink-negative", "Xl 2 1 1 2\n", 1, "one negative curl; the positive curl switched", ""},
    CorpusEntry{"unknot-two-crossing", "Xr 2 4 1 1\nXr 3 3 2 4\n", 1, "closure of sigma1 sigma2; writhe 2", "3: 1 2"},
    CorpusEntry{"unlink-2", "loops 2\n", 2, "two crossing-free circles", ""},
    CorpusEntry{"unlink-3", "loops 3\n", 3, "three crossing-free circles", ""},
    CorpusEntry{"hopf-positive", "Xr 2 4 3 1\nXr 4 2 1 3\n", 2, "positive clasp, lk = +1", "2: 1 1"},
    CorpusEntry{"hopf-negative", "Xl 1 2 4 3\nXl 3 4 2 1\n", 2, "negative clasp, lk = -1", "2: -1 -1"},
    CorpusEntry{"trefoil-right", "Xr 2 4 3 1\nXr 4 6 5 3\nXr 6 2 1 5\n", 1, "right-handed trefoil", "2: 1 1 1"},
    CorpusEntry{"trefoil-left", "Xl 1 2 4 3\nXl 3 4 6 5\nXl 5 6 2 1\n", 1, "left-handed trefoil", "2: -1 -1 -1"},
    CorpusEntry{"figure-eight", "Xr 2 5 4 1\nXl 5 3 7 6\nXr 6 8 1 4\nXl 8 7 3 2\n", 1, "figure-eight knot",
                "3: 1 -2 1 -2"},
    CorpusEntry{"cinquefoil", "Xr 2 4 3 1\nXr 4 6 5 3\nXr 6 8 7 5\nXr 8 10 9 7\nXr 10 2 1 9\n", 1,
                "(2,5) torus knot", "2: 1 1 1 1 1"},
    CorpusEntry{"torus-2-4", "Xr 2 4 3 1\nXr 4 6 5 3\nXr 6 8 7 5\nXr 8 2 1 7\n", 2, "(2,4) torus link, lk = +2",
                "2: 1 1 1 1"},
    CorpusEntry{"torus-2-6",
                "Xr 2 4 3 1\nXr 4 6 5 3\nXr 6 8 7 5\nXr 8 10 9 7\nXr 10 12 11 9\nXr 12 2 1 11\n", 2,
                "(2,6) torus link, lk = +3", "2: 1 1 1 1 1 1"},
    CorpusEntry{"whitehead", "Xr 2 5 4 1\nXl 5 3 7 6\nXr 6 8 1 4\nXl 8 7 10 9\nXl 9 10 3 2\n", 2,
                "Whitehead link, lk = 0", "3: 1 -2 1 -2 -2"},
    CorpusEntry{"borromean",
                "Xr 2 5 4 1\nXl 5 3 7 6\nXr 6 9 8 4\nXl 9 7 11 10\nXr 10 12 1 8\nXl 12 11 3 2\n", 3,
                "Borromean rings, all pairwise lk = 0", "3: 1 -2 1 -2 1 -2"},
    CorpusEntry{"chain-3", "Xr 2 5 4 1\nXr 5 6 1 4\nXr 3 8 7 6\nXr 8 3 2 7\n", 3,
                "three-link chain, two positive clasps", "3: 1 1 2 2"},
    CorpusEntry{"torus-3-3",
                "Xr 2 5 4 1\nXr 3 7 6 5\nXr 6 9 8 4\nXr 7 11 10 9\nXr 10 12 1 8\nXr 11 3 2 12\n", 3,
                "(3,3) torus link, pairwise lk = +1", "3: 1 2 1 2 1 2"},
    CorpusEntry{"hopf-plus-trefoil", "Xr 2 6 5 1\nXr 6 2 1 5\nXr 4 8 7 3\nXr 8 10 9 7\nXr 10 4 3 9\n", 3,
                "distant union of the positive Hopf link and the right trefoil", "4: 1 1 3 3 3"},
    CorpusEntry{"square-knot",
                "Xr 2 5 4 1\nXr 5 7 6 4\nXr 7 8 1 6\nXl 8 3 10 9\nXl 9 10 12 11\nXl 11 12 3 2\n", 1,
                "connected sum of the right and left trefoils", "3: 1 1 1 -2 -2 -2"},
};

}  // namespace

std::span<const CorpusEntry> corpus() { return kCorpus; }

const CorpusEntry* find_corpus_entry(std::string_view name) {
  const auto it = std::find_if(kCorpus.begin(), kCorpus.end(), [&](const CorpusEntry& e) { return e.name == name; });
  return it == kCorpus.end() ? nullptr : &*it;
}

}  // namespace skein
