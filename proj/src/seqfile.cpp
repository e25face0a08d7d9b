#include "tandem/seqfile.hpp"

#include <istream>
#include <ostream>

#include "tandem/errors.hpp"

namespace tandem {

namespace {

constexpr std::string_view kDna = "ACGT";

void require_dna_alphabet(int q)
{
    if (q != 4) throw DomainError("DNA encoding needs q = 4");
}

}  // namespace

std::string format_word(const Word& w, SymbolEncoding enc)
{
    if (enc == SymbolEncoding::digits) return w.str();
    require_dna_alphabet(w.alphabet());
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w.symbols()) out.push_back(kDna[s]);
    return out;
}

Word parse_word(std::string_view text, int q, SymbolEncoding enc)
{
    if (enc == SymbolEncoding::digits) return Word::parse(text, q);
    require_dna_alphabet(q);
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        const auto pos = kDna.find(c);
        if (pos == std::string_view::npos)
            throw DomainError(std::string("invalid nucleotide '") + c + "'");
        symbols.push_back(static_cast<Symbol>(pos));
    }
    return Word(std::move(symbols), q);
}

std::vector<Word> read_sequence_file(std::istream& in, int q, SymbolEncoding enc)
{
    std::vector<Word> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            words.push_back(parse_word(line, q, enc));
        } catch (const DomainError& e) {
            throw CorruptInputError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return words;
}

void write_sequence_file(std::ostream& out, const std::vector<Word>& words, SymbolEncoding enc)
{
    for (const Word& w : words) out << format_word(w, enc) << '\n';
}

}  // namespace tandem
