#include "pogroup/enumerate.hpp"

#include <vector>

namespace pogroup {

namespace {

int letter_code(const Letter& l) { return (l.gen - 1) * 2 + (l.sign < 0 ? 1 : 0); }

// Appends, in lexicographic letter-code order, every reduced word of exactly
// the given length to out.
void gen_words(int k, std::size_t len, Word& prefix, std::vector<Element>& out) {
  if (prefix.size() == len) {
    out.push_back(Element::of_word(prefix));
    return;
  }
  for (int g = 1; g <= k; ++g) {
    for (int s : {1, -1}) {
      if (!prefix.empty() && prefix.back().gen == g && prefix.back().sign == -s) continue;
      prefix.push_back(Letter{g, s});
      gen_words(k, len, prefix, out);
      prefix.pop_back();
    }
  }
}

} // namespace

bool word_stream_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (letter_code(a[i]) != letter_code(b[i])) return letter_code(a[i]) < letter_code(b[i]);
  return false;
}

struct ElementStream::Impl {
  Desc desc;
  std::vector<Element> cache;

  // Rat state: Calkin-Wilf walker.
  Rat cw{1};
  // Free state: next word length to batch-generate.
  std::size_t next_len = 0;
  // Tuple/Matrix state: diagonal level and odometer over child indices.
  std::vector<std::size_t> odo;
  std::size_t level = 0;
  std::vector<std::unique_ptr<ElementStream>> kids;

  explicit Impl(Desc d) : desc(std::move(d)) {
    switch (desc->kind) {
      case Kind::Prod:
      case Kind::Lex:
        for (const Desc& c : desc->children) kids.push_back(std::make_unique<ElementStream>(c));
        odo.assign(desc->children.size(), 0);
        if (!odo.empty()) odo[0] = level;
        break;
      case Kind::Matrix:
        odo.assign(2, 0);
        break;
      case Kind::Trivial:
        kids.push_back(std::make_unique<ElementStream>(desc->children[0]));
        break;
      default: break;
    }
  }

  // Advance the odometer to the next tuple of child indices, diagonally by
  // total level then lexicographically.
  void bump_odo() {
    const std::size_t n = odo.size();
    for (std::size_t i = n - 1; i-- > 0;) {
      if (odo[i] > 0) {
        std::size_t tail = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
          tail += odo[j];
          odo[j] = 0;
        }
        odo[i] -= 1;
        odo[i + 1] = tail + 1;
        return;
      }
    }
    ++level;
    odo.assign(n, 0);
    odo[0] = level;
  }

  void grow() {
    const std::size_t i = cache.size();
    switch (desc->kind) {
      case Kind::Int: {
        if (i == 0) {
          cache.push_back(Element::of_int(0));
        } else if (i % 2 == 1) {
          cache.push_back(Element::of_int(Int((i + 1) / 2)));
        } else {
          cache.push_back(Element::of_int(-Int(i / 2)));
        }
        return;
      }
      case Kind::Rat: {
        if (i == 0) {
          cache.push_back(Element::of_rat(Rat(0)));
          return;
        }
        if (i % 2 == 1) {
          cache.push_back(Element::of_rat(cw));
        } else {
          cache.push_back(Element::of_rat(-cw));
          // advance Calkin-Wilf: q -> 1 / (2*floor(q) + 1 - q)
          Rat fl(mpz_class(cw.get_num() / cw.get_den()));
          cw = 1 / (2 * fl + 1 - cw);
        }
        return;
      }
      case Kind::Matrix: {
        // level L pairs (a_i, b_j), i + j = L; a from Calkin-Wilf positives,
        // b from the signed rational stream.
        if (!a_stream) a_stream = std::make_unique<ElementStream>(desc_rat());
        if (!pos_cache_init) {
          pos_cache.emplace_back(1);
          pos_cache_init = true;
        }
        std::size_t ai = odo[0], bj = odo[1];
        while (pos_cache.size() <= ai) {
          const Rat& q = pos_cache.back();
          Rat fl(mpz_class(q.get_num() / q.get_den()));
          pos_cache.push_back(1 / (2 * fl + 1 - q));
        }
        cache.push_back(Element::of_mat(Mat{pos_cache[ai], a_stream->at(bj).qval()}));
        if (odo[0] == 0) {
          ++level;
          odo[0] = level;
          odo[1] = 0;
        } else {
          odo[0] -= 1;
          odo[1] += 1;
        }
        return;
      }
      case Kind::Free: {
        while (cache.size() <= i) {
          Word prefix;
          gen_words(desc->generators, next_len, prefix, cache);
          ++next_len;
        }
        return;
      }
      case Kind::Prod:
      case Kind::Lex: {
        Element::Tuple t;
        t.reserve(odo.size());
        for (std::size_t c = 0; c < odo.size(); ++c) t.push_back(kids[c]->at(odo[c]));
        cache.push_back(Element::of_tuple(std::move(t)));
        bump_odo();
        return;
      }
      case Kind::Trivial: {
        cache.push_back(kids[0]->at(i));
        return;
      }
    }
  }

  std::unique_ptr<ElementStream> a_stream;
  std::vector<Rat> pos_cache;
  bool pos_cache_init = false;
};

ElementStream::ElementStream(Desc d) : impl_(std::make_unique<Impl>(std::move(d))) {}
ElementStream::~ElementStream() = default;
ElementStream::ElementStream(ElementStream&&) noexcept = default;
ElementStream& ElementStream::operator=(ElementStream&&) noexcept = default;

const Element& ElementStream::at(std::size_t i) {
  while (impl_->cache.size() <= i) impl_->grow();
  return impl_->cache[i];
}

} // namespace pogroup
