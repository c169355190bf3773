#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "commspec/families.hpp"

namespace commspec {

namespace detail {

struct Atom {
    std::string text;
    std::size_t offset; // byte offset into the original spec string
};

[[noreturn]] inline void parse_fail(const std::string& message, std::size_t offset) {
    throw std::invalid_argument("group spec error at offset " + std::to_string(offset) + ": " + message);
}

inline long long parse_param(const std::string& s, std::size_t offset) {
    if (s.empty()) parse_fail("empty parameter", offset);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) parse_fail("parameter is not a number: '" + s + "'", offset);
    if (s.size() > 10) parse_fail("parameter out of range: '" + s + "'", offset);
    return std::stoll(s);
}

inline FamilySpec parse_atom(const Atom& atom) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= atom.text.size(); ++i) {
        if (i == atom.text.size() || atom.text[i] == ':') {
            parts.push_back(atom.text.substr(start, i - start));
            start = i + 1;
        }
    }
    const std::string& name = parts[0];
    auto params_required = [&](std::size_t count) {
        if (parts.size() - 1 != count)
            parse_fail("'" + name + "' takes " + std::to_string(count) + " parameter(s)", atom.offset);
        std::vector<long long> ps;
        for (std::size_t i = 1; i < parts.size(); ++i) ps.push_back(parse_param(parts[i], atom.offset));
        return ps;
    };

    FamilySpec spec;
    if (name == "Z") {
        spec.family = Family::Cyclic;
        spec.params = params_required(1);
    } else if (name == "D") {
        spec.family = Family::Dihedral;
        spec.params = params_required(1);
        if (spec.params[0] < 6 || spec.params[0] % 2 != 0)
            parse_fail("'D:<order>' needs an even group order >= 6 (D:2m is the dihedral group of order 2m)",
                       atom.offset);
    } else if (name == "Q") {
        spec.family = Family::GenQuaternion;
        spec.params = params_required(1);
        if (spec.params[0] < 8 || spec.params[0] % 4 != 0)
            parse_fail("'Q:<order>' needs a group order divisible by 4 and >= 8", atom.offset);
    } else if (name == "QD") {
        spec.family = Family::Quasidihedral;
        spec.params = params_required(1);
        long long v = spec.params[0];
        if (v < 16 || (v & (v - 1)) != 0)
            parse_fail("'QD:<order>' needs a power of two >= 16", atom.offset);
    } else if (name == "M16") {
        spec.family = Family::M16;
        params_required(0);
    } else if (name == "Z4sZ4") {
        spec.family = Family::Z4rtimesZ4;
        params_required(0);
    } else if (name == "D8cZ4") {
        spec.family = Family::D8centralZ4;
        params_required(0);
    } else if (name == "SG16_3") {
        spec.family = Family::SG16_3;
        params_required(0);
    } else if (name == "A") {
        spec.family = Family::Alternating;
        spec.params = params_required(1);
    } else if (name == "S") {
        spec.family = Family::Symmetric;
        spec.params = params_required(1);
    } else if (name == "SL2") {
        spec.family = Family::SL2;
        spec.params = params_required(1);
    } else if (name == "GL2") {
        spec.family = Family::GL2;
        spec.params = params_required(1);
    } else if (name == "PSL2") {
        spec.family = Family::PSL2;
        spec.params = params_required(1);
    } else if (name == "F20") {
        spec.family = Family::F20;
        params_required(0);
    } else if (name == "HA") {
        spec.family = Family::HanakiA;
        spec.params = params_required(1);
    } else if (name == "HB") {
        spec.family = Family::HanakiB;
        spec.params = params_required(2);
    } else if (name == "PQ") {
        spec.family = Family::SemidirectPQ;
        spec.params = params_required(2);
    } else {
        parse_fail("unknown family '" + name + "'", atom.offset);
    }
    return spec;
}

} // namespace detail

// Grammar: atom ('x' atom)*, whitespace-insensitive around 'x'; atoms are
// NAME[:INT[:INT]]. Products associate to the left.
inline FamilySpec parse_group_spec(std::string_view text) {
    std::vector<detail::Atom> atoms;
    std::string current;
    std::size_t current_start = 0;
    bool started = false;
    auto flush = [&](std::size_t at) {
        while (!current.empty() && std::isspace(static_cast<unsigned char>(current.back()))) current.pop_back();
        if (current.empty()) detail::parse_fail("empty group spec before 'x'", at);
        atoms.push_back({current, current_start});
        current.clear();
        started = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'x') {
            flush(i);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            if (started) current += c; // interior spaces are trimmed at flush
        } else {
            if (!started) {
                current_start = i;
                started = true;
            }
            current += c;
        }
    }
    while (!current.empty() && std::isspace(static_cast<unsigned char>(current.back()))) current.pop_back();
    if (current.empty()) detail::parse_fail("empty group spec", text.size());
    atoms.push_back({current, current_start});

    FamilySpec result = detail::parse_atom(atoms[0]);
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        FamilySpec product;
        product.family = Family::Product;
        product.factors.push_back(std::move(result));
        product.factors.push_back(detail::parse_atom(atoms[i]));
        result = std::move(product);
    }
    return result;
}

} // namespace commspec
