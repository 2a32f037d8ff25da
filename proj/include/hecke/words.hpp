#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/group.hpp"

namespace hecke {

/// Generator letter of H(m,1,n): tau^{+-1} or sigma_i^{+-1}.
struct Letter {
    enum Kind { tau, tau_inv, sigma, sigma_inv } kind;
    int index = 0; // sigma index, 1-based
};
using Word = std::vector<Letter>;

inline Letter lt_tau() { return {Letter::tau, 0}; }
inline Letter lt_tau_inv() { return {Letter::tau_inv, 0}; }
inline Letter lt_sigma(int i) { return {Letter::sigma, i}; }
inline Letter lt_sigma_inv(int i) { return {Letter::sigma_inv, i}; }

inline Letter letter_inverse(Letter l) {
    switch (l.kind) {
    case Letter::tau: return lt_tau_inv();
    case Letter::tau_inv: return lt_tau();
    case Letter::sigma: return lt_sigma_inv(l.index);
    case Letter::sigma_inv: return lt_sigma(l.index);
    }
    throw Error("unreachable");
}

inline void append_tau_power(Word& w, long a) {
    for (long k = 0; k < (a > 0 ? a : -a); ++k) w.push_back(a > 0 ? lt_tau() : lt_tau_inv());
}

inline std::string letter_to_string(const Letter& l) {
    switch (l.kind) {
    case Letter::tau: return "T";
    case Letter::tau_inv: return "T^-1";
    case Letter::sigma: return "G" + std::to_string(l.index);
    case Letter::sigma_inv: return "G" + std::to_string(l.index) + "^-1";
    }
    throw Error("unreachable");
}

inline std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << letter_to_string(w[i]);
    return os.str();
}

inline std::string group_word_to_string(const GroupWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        switch (w[i].kind) {
        case GroupLetter::t: os << "t"; break;
        case GroupLetter::t_inv: os << "t^-1"; break;
        case GroupLetter::s: os << "s" << w[i].index; break;
        }
    }
    return os.str();
}

namespace detail {

struct WordParseError : Error {
    WordParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

inline std::vector<std::pair<std::string, size_t>> word_tokens(const std::string& text) {
    std::vector<std::pair<std::string, size_t>> toks;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '*') ++i;
        toks.emplace_back(text.substr(start, i - start), start);
    }
    return toks;
}

/// Splits "name^exp" -> (name, exp); missing exponent means 1.
inline std::pair<std::string, long> split_power(const std::string& tok, size_t pos) {
    auto caret = tok.find('^');
    if (caret == std::string::npos) return {tok, 1};
    std::string base = tok.substr(0, caret);
    std::string exps = tok.substr(caret + 1);
    try {
        size_t used = 0;
        long e = std::stol(exps, &used);
        if (used != exps.size()) throw std::invalid_argument("");
        return {base, e};
    } catch (...) {
        throw WordParseError("bad exponent '" + exps + "'", pos);
    }
}

} // namespace detail

/// Grammar: letters `t`, `t^-1`, `t^3`, `s1`, `s2`, ... separated by spaces or `*`.
inline GroupWord parse_group_word(const std::string& text, GroupSignature sig) {
    GroupWord w;
    for (auto& [tok, pos] : detail::word_tokens(text)) {
        auto [base, exp] = detail::split_power(tok, pos);
        if (base == "t") {
            for (long k = 0; k < (exp > 0 ? exp : -exp); ++k)
                w.push_back(exp > 0 ? gl_t() : gl_t_inv());
        } else if (base.size() > 1 && base[0] == 's') {
            int idx = 0;
            try {
                idx = std::stoi(base.substr(1));
            } catch (...) {
                throw detail::WordParseError("bad letter '" + tok + "'", pos);
            }
            if (idx < 1 || idx >= sig.n)
                throw detail::WordParseError("generator s" + std::to_string(idx) + " out of range", pos);
            if (exp < 0) exp = -exp; // s_i is an involution
            for (long k = 0; k < exp; ++k) w.push_back(gl_s(idx));
        } else {
            throw detail::WordParseError("bad letter '" + tok + "'", pos);
        }
    }
    return w;
}

/// Grammar: letters `T`, `T^-1`, `T^3`, `G1`, `G1^-1`, ... separated by spaces or `*`.
inline Word parse_word(const std::string& text, int n) {
    Word w;
    for (auto& [tok, pos] : detail::word_tokens(text)) {
        auto [base, exp] = detail::split_power(tok, pos);
        if (base == "T") {
            append_tau_power(w, exp);
        } else if (base.size() > 1 && base[0] == 'G') {
            int idx = 0;
            try {
                idx = std::stoi(base.substr(1));
            } catch (...) {
                throw detail::WordParseError("bad letter '" + tok + "'", pos);
            }
            if (idx < 1 || idx >= n)
                throw detail::WordParseError("generator G" + std::to_string(idx) + " out of range", pos);
            for (long k = 0; k < (exp > 0 ? exp : -exp); ++k)
                w.push_back(exp > 0 ? lt_sigma(idx) : lt_sigma_inv(idx));
        } else {
            throw detail::WordParseError("bad letter '" + tok + "'", pos);
        }
    }
    return w;
}

} // namespace hecke
