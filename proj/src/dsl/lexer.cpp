#include "homwb/dsl/lexer.hpp"

#include "homwb/dsl/spec.hpp"

#include <cctype>

namespace homwb::dsl {

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

} // namespace

std::string Token::describe() const {
    if (kind == Kind::End) return "end of line";
    return "'" + text + "'";
}

std::string strip_comment(const std::string& line) {
    const auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::vector<Token> lex_line(const std::string& line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    bool spaced = true;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            spaced = true;
            ++i;
            continue;
        }
        Token t;
        t.line = line_no;
        t.column = static_cast<int>(i) + 1;
        t.spaced = spaced;
        if (word_char(c)) {
            std::size_t j = i;
            while (j < line.size()) {
                if (word_char(line[j])) ++j;
                else if (line[j] == '-' && j + 1 < line.size() && std::isalpha(static_cast<unsigned char>(line[j + 1])))
                    ++j;
                else break;
            }
            t.kind = Token::Kind::Word;
            t.text = line.substr(i, j - i);
            i = j;
        } else {
            static const char* two[] = {"->", "..", "|-"};
            t.kind = Token::Kind::Symbol;
            for (const char* s : two)
                if (line.compare(i, 2, s) == 0) t.text = s;
            if (t.text.empty()) {
                if (std::string("{}()[],:;=./&+-*").find(c) == std::string::npos)
                    throw ParseError(line_no, t.column, std::string("unexpected character '") + c + "'");
                t.text = std::string(1, c);
            }
            i += t.text.size();
        }
        out.push_back(std::move(t));
        spaced = false;
    }
    Token end;
    end.line = line_no;
    end.column = static_cast<int>(line.size()) + 1;
    end.spaced = true;
    out.push_back(end);
    return out;
}

} // namespace homwb::dsl
