#ifndef SEQLAB_CORPUS_HPP
#define SEQLAB_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seqlab/tags.hpp"

namespace seqlab {

// Tokenizer contract version; bump when the splitting rules change.
// Version 1: split on ASCII whitespace, then peel leading/trailing ASCII
// punctuation (hyphens excluded) into single-character tokens, keeping a
// bracket attached when its partner lives inside the token, so
// "poly(dimethylsiloxane)" and "(PDMS)" both survive as single tokens.
inline constexpr int kTokenizerVersion = 1;

struct Token {
  std::string text;
  std::size_t begin = 0;  // code-point offset into the source, inclusive
  std::size_t end = 0;    // exclusive
};

std::vector<Token> tokenize(const std::string& text);

struct Sentence {
  std::string doc_id;
  int index_in_doc = 0;
  std::vector<std::string> tokens;
  std::vector<int> tags;  // parallel to tokens, ids from a TagScheme
  std::vector<std::pair<std::size_t, std::size_t>> char_offsets;
};

struct EntityMention {
  std::string doc_id;
  int sentence_index = 0;
  std::size_t start_char = 0;
  std::size_t end_char = 0;
  std::string surface;
  std::string entity_class;
};

// A mention expressed in token coordinates within one sentence.
struct TokenSpan {
  std::size_t first_token = 0;
  std::size_t last_token = 0;  // inclusive
  int class_id = 0;
};

// Span -> tag sequence. Length-1 spans become a solitary B-, length-2
// B,E and longer runs B,I...,E. Throws DataError on overlapping spans.
std::vector<int> encode_tags(const std::vector<TokenSpan>& spans,
                             std::size_t num_tokens, const TagScheme& scheme);

struct DecodeResult {
  std::vector<TokenSpan> spans;
  int repairs = 0;
};

// Total inverse of encode_tags. Malformed runs (I/E without B, class
// switches, unterminated B,I... runs) are repaired by truncating the run
// at the violation and starting a new one there; each violation bumps
// the repair counter. Well-formed input decodes with zero repairs.
DecodeResult decode_tags(const std::vector<int>& tags, const TagScheme& scheme);

// CoNLL-style reader: "token<TAB>tag" lines, blank line between
// sentences, "-DOCSTART- <id>" opening a document. When require_tags is
// false a bare token line is accepted and tagged O.
std::vector<Sentence> parse_conll(std::istream& in, const TagScheme& scheme,
                                  bool require_tags = true);

void write_conll(std::ostream& out, const std::vector<Sentence>& sentences,
                 const TagScheme& scheme);

struct ConvertStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t mentions = 0;
  std::size_t retokenized_mentions = 0;  // needed a token split to align
};

struct ConvertResult {
  std::vector<Sentence> sentences;
  ConvertStats stats;
};

// Offset-annotation ingestion. text rows: doc_id TAB title TAB abstract.
// annotation rows: doc_id TAB section(T|A) TAB start TAB end TAB surface
// TAB class, offsets counted in code points within the section. Mentions
// whose boundaries fall inside a token force a re-tokenization at the
// mention boundary. Surface/slice disagreement raises DataError.
ConvertResult parse_offset_annotations(std::istream& text_stream,
                                       std::istream& ann_stream,
                                       const TagScheme& scheme);

struct MentionDecode {
  std::vector<EntityMention> mentions;
  int repairs = 0;
};

// Tags -> char-level mentions for one sentence, via decode_tags.
MentionDecode mentions_from_tags(const Sentence& sentence,
                                 const std::vector<int>& tags,
                                 const TagScheme& scheme);

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::size_t mentions = 0;
  std::map<std::string, std::size_t> per_class;
};

CorpusStats corpus_stats(const std::vector<Sentence>& sentences,
                         const TagScheme& scheme);

std::string format_stats(const CorpusStats& stats);

// Token <-> id map with PAD = 0 and UNK = 1 reserved. Ids are assigned
// by descending frequency, ties broken lexicographically, so two builds
// over the same multiset of tokens agree exactly.
class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;

  Vocabulary();

  static Vocabulary build(const std::vector<Sentence>& corpus,
                          std::size_t min_count);

  int encode(const std::string& token) const;
  const std::string& token(int id) const;
  std::size_t size() const { return id_to_token_.size(); }

  const std::vector<std::string>& tokens() const { return id_to_token_; }

  // Rebuilds from an explicit id -> token list (checkpoint loading).
  static Vocabulary from_tokens(std::vector<std::string> id_to_token);

 private:
  std::unordered_map<std::string, int> token_to_id_;
  std::vector<std::string> id_to_token_;
};

}  // namespace seqlab

#endif  // SEQLAB_CORPUS_HPP
