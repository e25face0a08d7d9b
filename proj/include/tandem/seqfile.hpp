#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tandem/word.hpp"

namespace tandem {

/// Digits 0..q-1, or A/C/G/T for 0/1/2/3 when q = 4.
enum class SymbolEncoding { digits, dna };

std::string format_word(const Word& w, SymbolEncoding enc);
Word parse_word(std::string_view text, int q, SymbolEncoding enc);

/// One word per line; empty lines are skipped. Malformed lines raise
/// CorruptInputError naming the line number.
std::vector<Word> read_sequence_file(std::istream& in, int q, SymbolEncoding enc);
void write_sequence_file(std::ostream& out, const std::vector<Word>& words, SymbolEncoding enc);

}  // namespace tandem
