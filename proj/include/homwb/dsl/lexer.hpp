#pragma once

#include <string>
#include <vector>

namespace homwb::dsl {

struct Token {
    enum class Kind { Word, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0;
    int column = 0;     ///< 1-based
    bool spaced = false;  ///< whitespace right before the token

    bool is(const char* sym) const { return kind == Kind::Symbol && text == sym; }
    bool is_word(const char* w) const { return kind == Kind::Word && text == w; }
    std::string describe() const;
};

/// Tokens of one source line (comment already removed), closed by an End
/// token. Words are runs of [A-Za-z0-9_']; a '-' between a word character
/// and a letter stays inside the word ("end-algebra").
std::vector<Token> lex_line(const std::string& line, int line_no);

/// Line without its '#' comment.
std::string strip_comment(const std::string& line);

} // namespace homwb::dsl
