#include "uniseq/sequence.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uniseq/errors.hpp"

namespace uniseq {

namespace {

bool produces_letters(const Template& t)
{
    for (const auto& seg : t) {
        if (const auto* lit = std::get_if<Literal>(&seg); lit && !lit->word.empty())
            return true;
        if (const auto* pow = std::get_if<Power>(&seg); pow && !pow->base.empty())
            return true;
    }
    return false;
}

void validate(const std::vector<Template>& templates)
{
    if (templates.empty())
        throw InvalidFamily("a family needs at least one template");
    for (std::size_t i = 0; i < templates.size(); ++i) {
        const auto& t = templates[i];
        if (t.empty())
            throw InvalidFamily("template " + std::to_string(i) + " has no segments");
        for (const auto& seg : t) {
            if (const auto* pow = std::get_if<Power>(&seg)) {
                const auto& e = pow->exponent;
                if (e.c < 0 || e.d < 0 || e.c + e.d < 1)
                    throw InvalidFamily("template " + std::to_string(i)
                                        + ": exponent needs c >= 0, d >= 0 and c + d >= 1");
            }
        }
        if (!produces_letters(t))
            throw InvalidFamily("template " + std::to_string(i) + " instantiates to the empty word");
    }
}

Word expand(const Template& t, std::int64_t n)
{
    Word out;
    for (const auto& seg : t) {
        if (const auto* lit = std::get_if<Literal>(&seg))
            out += lit->word;
        else {
            const auto& pow = std::get<Power>(seg);
            out += pow.base.power(static_cast<std::size_t>(pow.exponent.at(n)));
        }
    }
    return out;
}

} // namespace

SequenceFamily::SequenceFamily(std::vector<Template> templates, bool is_explicit)
    : templates_(std::move(templates)), explicit_(is_explicit)
{
    validate(templates_);
}

SequenceFamily SequenceFamily::parametric(Template t)
{
    std::vector<Template> ts;
    ts.push_back(std::move(t));
    return SequenceFamily(std::move(ts), false);
}

SequenceFamily SequenceFamily::explicit_list(std::vector<Template> templates)
{
    return SequenceFamily(std::move(templates), true);
}

SequenceFamily SequenceFamily::explicit_words(const std::vector<Word>& words)
{
    std::vector<Template> ts;
    ts.reserve(words.size());
    for (const auto& w : words)
        ts.push_back(Template{Literal{w}});
    return SequenceFamily(std::move(ts), true);
}

Word SequenceFamily::instantiate(std::int64_t n) const
{
    if (n < 1)
        throw IndexOutOfRange("sequence indices start at 1, got " + std::to_string(n));
    if (!explicit_)
        return expand(templates_.front(), n);
    if (static_cast<std::size_t>(n) > templates_.size())
        throw IndexOutOfRange("index " + std::to_string(n) + " exceeds the explicit list of "
                              + std::to_string(templates_.size()) + " words");
    return expand(templates_[static_cast<std::size_t>(n - 1)], n);
}

std::vector<Word> SequenceFamily::first(std::int64_t count) const
{
    std::vector<Word> out;
    for (std::int64_t n = 1; n <= count; ++n)
        out.push_back(instantiate(n));
    return out;
}

Word substitute(std::string_view word, const std::map<char, Word>& assignment)
{
    Word out;
    for (char letter : word) {
        auto it = assignment.find(letter);
        if (it == assignment.end())
            throw MissingLetterImage(std::string("no image for letter '") + letter + "'");
        out += it->second;
    }
    return out;
}

std::vector<Word> substitute(std::span<const std::string> sequence, const std::map<char, Word>& assignment)
{
    std::vector<Word> out;
    out.reserve(sequence.size());
    for (const auto& u : sequence)
        out.push_back(substitute(u, assignment));
    return out;
}

namespace families {

SequenceFamily banach()
{
    return SequenceFamily::parametric(
        {Literal{Word("ab")}, Power{Word("a"), {1, 1}}, Literal{Word("bb")}});
}

SequenceFamily sierpinski()
{
    return SequenceFamily::parametric(
        {Literal{Word("aabbb")}, Power{Word("ababbb"), {1, 1}}, Literal{Word("abbabbb")}});
}

SequenceFamily aba_ab_bab()
{
    return SequenceFamily::parametric(
        {Literal{Word("aba")}, Power{Word("ab"), {1, 1}}, Literal{Word("bab")}});
}

SequenceFamily ab_power()
{
    return SequenceFamily::parametric({Power{Word("ab"), {1, 0}}});
}

} // namespace families

// ---------------------------------------------------------------------------
// JSON

namespace {

using json = Json;

[[noreturn]] void field_error(const std::string& path, const std::string& what)
{
    throw ParseError(path + ": " + what);
}

Word word_field(const json& node, const std::string& path)
{
    if (!node.is_string())
        field_error(path, "expected a string of 'a'/'b'");
    const auto& s = node.get_ref<const std::string&>();
    if (!is_binary_word(s))
        field_error(path, "'" + s + "' has letters outside {a, b}");
    return Word(s);
}

std::int64_t exponent_field(const json& node, const std::string& path)
{
    if (!node.is_number_integer())
        field_error(path, "expected an integer");
    const auto v = node.get<std::int64_t>();
    if (v < 0)
        field_error(path, "must be non-negative, got " + std::to_string(v));
    return v;
}

Segment segment_from_json(const json& node, const std::string& path)
{
    if (!node.is_object() || node.size() != 1)
        field_error(path, "expected an object with exactly one of \"lit\" or \"pow\"");
    if (node.contains("lit"))
        return Literal{word_field(node["lit"], path + ".lit")};
    if (node.contains("pow")) {
        const auto& p = node["pow"];
        if (!p.is_object())
            field_error(path + ".pow", "expected an object");
        for (const char* key : {"base", "c", "d"})
            if (!p.contains(key))
                field_error(path + ".pow", std::string("missing \"") + key + "\"");
        Power pow{word_field(p["base"], path + ".pow.base"),
                  {exponent_field(p["c"], path + ".pow.c"), exponent_field(p["d"], path + ".pow.d")}};
        if (pow.exponent.c + pow.exponent.d < 1)
            field_error(path + ".pow", "c + d must be at least 1");
        return pow;
    }
    field_error(path, "expected \"lit\" or \"pow\"");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else
            ++col;
    }
    return {line, col};
}

} // namespace

SequenceFamily family_from_json(const Json& doc)
{
    if (!doc.is_object())
        field_error("$", "expected a JSON object");
    if (!doc.contains("alphabet") || !doc["alphabet"].is_string())
        field_error("$.alphabet", "missing or not a string");
    const auto& alphabet = doc["alphabet"].get_ref<const std::string&>();
    if (alphabet != "ab")
        throw UnsupportedAlphabet("alphabet must be exactly \"ab\", got \"" + alphabet
                                  + "\"; substitute the sequence into {a, b} first");

    const bool has_templates = doc.contains("templates");
    const bool has_words = doc.contains("words");
    if (has_templates == has_words)
        field_error("$", "expected exactly one of \"templates\" or \"words\"");

    try {
        if (has_words) {
            const auto& ws = doc["words"];
            if (!ws.is_array() || ws.empty())
                field_error("$.words", "expected a nonempty array");
            std::vector<Word> words;
            for (std::size_t i = 0; i < ws.size(); ++i)
                words.push_back(word_field(ws[i], "$.words[" + std::to_string(i) + "]"));
            return SequenceFamily::explicit_words(words);
        }

        const auto& ts = doc["templates"];
        if (!ts.is_array() || ts.empty())
            field_error("$.templates", "expected a nonempty array");
        std::vector<Template> templates;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const std::string tpath = "$.templates[" + std::to_string(i) + "]";
            if (!ts[i].is_array() || ts[i].empty())
                field_error(tpath, "expected a nonempty array of segments");
            Template t;
            for (std::size_t j = 0; j < ts[i].size(); ++j)
                t.push_back(segment_from_json(ts[i][j], tpath + "[" + std::to_string(j) + "]"));
            templates.push_back(std::move(t));
        }
        bool force_explicit = false;
        if (doc.contains("explicit")) {
            if (!doc["explicit"].is_boolean())
                field_error("$.explicit", "expected a boolean");
            force_explicit = doc["explicit"].get<bool>();
        }
        if (templates.size() == 1 && !force_explicit)
            return SequenceFamily::parametric(std::move(templates.front()));
        return SequenceFamily::explicit_list(std::move(templates));
    } catch (const InvalidFamily& e) {
        throw ParseError(std::string("$: ") + e.what());
    }
}

SequenceFamily parse_family(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col)
                         + ": malformed JSON");
    }
    return family_from_json(doc);
}

SequenceFamily parse_family_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_family(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Json family_to_json(const SequenceFamily& family)
{
    json templates = json::array();
    for (const auto& t : family.templates()) {
        json segs = json::array();
        for (const auto& seg : t) {
            if (const auto* lit = std::get_if<Literal>(&seg))
                segs.push_back({{"lit", lit->word.str()}});
            else {
                const auto& pow = std::get<Power>(seg);
                segs.push_back({{"pow", {{"base", pow.base.str()}, {"c", pow.exponent.c}, {"d", pow.exponent.d}}}});
            }
        }
        templates.push_back(std::move(segs));
    }
    json doc = {{"alphabet", "ab"}, {"templates", std::move(templates)}};
    if (family.is_explicit() && family.templates().size() == 1)
        doc["explicit"] = true;
    return doc;
}

} // namespace uniseq
