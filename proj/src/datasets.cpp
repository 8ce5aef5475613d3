#include "classnum/datasets.hpp"

#include "classnum/arithmetic.hpp"

#include <array>
#include <cctype>
#include <istream>
#include <sstream>
#include <utility>

namespace classnum {

namespace detail {
/* Generated from the data/ directory at configure time. */
extern const char* const bundled_cyclotomic_minus;
extern const char* const bundled_cyclotomic_real;
extern const char* const bundled_cubic_real;
extern const char* const bundled_real_cyclic_small_conductor;
extern const char* const bundled_quintic;
extern const char* const bundled_decimic;
} // namespace detail

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr std::array<FamilyName, 7> family_names{{
    {Family::CyclotomicMinus, "cyclotomic_minus"},
    {Family::CyclotomicReal, "cyclotomic_real"},
    {Family::CubicReal, "cubic_real"},
    {Family::RealCyclicSmallConductor, "real_cyclic_small_conductor"},
    {Family::Quintic, "quintic"},
    {Family::Decimic, "decimic"},
    {Family::Custom, "custom"},
}};

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = line.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, at - start));
        start = at + 1;
    }
}

bool is_all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    return s.find_first_not_of("0123456789") == std::string::npos;
}

} // namespace

std::string to_string(Family family)
{
    for (const auto& [f, name] : family_names) {
        if (f == family)
            return name;
    }
    return "custom";
}

std::optional<Family> family_from_string(const std::string& name)
{
    for (const auto& [f, fname] : family_names) {
        if (name == fname)
            return f;
    }
    return std::nullopt;
}

const std::vector<Family>& all_families()
{
    static const std::vector<Family> families{
        Family::CyclotomicMinus,          Family::CyclotomicReal, Family::CubicReal,
        Family::RealCyclicSmallConductor, Family::Quintic,        Family::Decimic,
    };
    return families;
}

DatasetError::DatasetError(const std::string& source, std::size_t line, std::size_t column,
                           const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      source_(source),
      line_(line),
      column_(column)
{
}

namespace {

class RowParser {
public:
    RowParser(std::string source, std::size_t line_no, const std::string& line)
        : source_(std::move(source)), line_(line_no)
    {
        fields_ = split(line, '\t');
        offsets_.reserve(fields_.size());
        std::size_t at = 0;
        for (const std::string& f : fields_) {
            offsets_.push_back(at);
            at += f.size() + 1;
        }
    }

    [[noreturn]] void fail(std::size_t field, std::size_t offset_in_field,
                           const std::string& message) const
    {
        std::size_t column = 1 + (field < offsets_.size() ? offsets_[field] : 0) + offset_in_field;
        throw DatasetError(source_, line_, column, message);
    }

    const std::string& field(std::size_t i) const
    {
        static const std::string empty;
        return i < fields_.size() ? fields_[i] : empty;
    }

    std::size_t field_count() const { return fields_.size(); }

    FieldRecord parse()
    {
        if (field_count() < 5)
            fail(field_count() ? field_count() - 1 : 0, 0,
                 "expected at least 5 tab-separated fields "
                 "(family label conductor degree_expr class_expr [ranks subfield notes])");
        if (field_count() > 8)
            fail(8, 0, "too many fields; expected at most 8");

        FieldRecord record;
        auto fam = family_from_string(field(0));
        if (!fam)
            fail(0, 0, "unknown family '" + field(0) + "'");
        record.family = *fam;

        if (field(1).empty())
            fail(1, 0, "label must not be empty");
        record.label = field(1);

        if (!field(2).empty()) {
            if (!is_all_digits(field(2)))
                fail(2, 0, "conductor must be a positive integer");
            record.conductor = Integer(field(2));
            if (*record.conductor < 1)
                fail(2, 0, "conductor must be a positive integer");
        }

        record.degree_items = parse_expr_field(3, "degree_expr");
        record.degree_N = 1;
        for (const auto& item : record.degree_items)
            record.degree_N *= item.value;
        if (record.degree_N < 2)
            fail(3, 0, "degree must be at least 2");
        record.odd_part_N1 = odd_part(record.degree_N);

        record.class_items = parse_expr_field(4, "class_expr");
        record.class_total = 1;
        for (const auto& item : record.class_items)
            record.class_total *= item.value;

        parse_ranks(record);
        parse_subfields(record);
        record.notes = field(7);
        check_notes_total(record);
        check_family_laws(record);
        return record;
    }

private:
    std::vector<FactorExpression> parse_expr_field(std::size_t i, const char* what)
    {
        if (field(i).empty())
            fail(i, 0, std::string(what) + " must not be empty");
        try {
            return parse_class_expression(field(i));
        } catch (const ParseError& e) {
            fail(i, e.position(), std::string(what) + ": " + e.what());
        }
    }

    void parse_ranks(FieldRecord& record)
    {
        const std::string& text = field(5);
        if (text.empty())
            return;
        std::size_t at = 0;
        for (const std::string& pair : split(text, ',')) {
            std::size_t colon = pair.find(':');
            if (colon == std::string::npos)
                fail(5, at, "rank annotation must be p:r");
            std::string ps = pair.substr(0, colon), rs = pair.substr(colon + 1);
            if (!is_all_digits(ps) || !is_all_digits(rs))
                fail(5, at, "rank annotation must be p:r with integers");
            if (rs.size() > 6)
                fail(5, at + colon + 1, "rank annotation is implausibly large");
            Integer p(ps);
            unsigned long r = std::stoul(rs);
            if (r == 0)
                fail(5, at + colon + 1, "rank must be positive");
            if (!is_prime(p))
                fail(5, at, "rank annotation prime " + ps + " is not prime");
            if (record.class_total % p != 0)
                fail(5, at, "rank annotation prime " + ps + " does not divide the class number");
            if (!record.rank_annotations.emplace(p, static_cast<unsigned>(r)).second)
                fail(5, at, "duplicate rank annotation for p=" + ps);
            at += pair.size() + 1;
        }
    }

    void parse_subfields(FieldRecord& record)
    {
        const std::string& text = field(6);
        if (text.empty())
            return;
        std::size_t at = 0;
        for (const std::string& pair : split(text, ',')) {
            std::size_t eq = pair.find('=');
            if (eq == std::string::npos || eq == 0)
                fail(6, at, "subfield annotation must be label=expr");
            SubfieldClassNumber sub;
            sub.label = pair.substr(0, eq);
            try {
                sub.value = evaluate_expression(pair.substr(eq + 1));
            } catch (const ParseError& e) {
                fail(6, at + eq + 1 + e.position(), std::string("subfield value: ") + e.what());
            }
            record.subfields.push_back(std::move(sub));
            at += pair.size() + 1;
        }
    }

    void check_notes_total(const FieldRecord& record)
    {
        const std::string& notes = record.notes;
        const std::string key = "total=";
        std::size_t at = 0;
        while ((at = notes.find(key, at)) != std::string::npos) {
            bool token_start = at == 0 || notes[at - 1] == ' ' || notes[at - 1] == ';';
            std::size_t begin = at + key.size(), end = begin;
            while (end < notes.size() && std::isdigit(static_cast<unsigned char>(notes[end])))
                ++end;
            if (token_start && end > begin) {
                Integer stated(notes.substr(begin, end - begin));
                if (stated != record.class_total)
                    fail(7, at, "stated total " + to_string(stated) +
                                    " disagrees with evaluated class number " +
                                    to_string(record.class_total));
            }
            at = end > at ? end : at + key.size();
        }
    }

    void check_family_laws(const FieldRecord& record)
    {
        switch (record.family) {
        case Family::CyclotomicMinus:
            if (!record.conductor)
                fail(2, 0, "cyclotomic_minus needs a conductor");
            if (euler_phi(*record.conductor) != record.degree_N)
                fail(3, 0, "degree must equal phi(conductor) for cyclotomic_minus");
            break;
        case Family::CyclotomicReal:
            if (!record.conductor)
                fail(2, 0, "cyclotomic_real needs a conductor");
            if (!is_prime(*record.conductor))
                fail(2, 0, "cyclotomic_real conductor must be prime");
            if ((*record.conductor - 1) / 2 != record.degree_N)
                fail(3, 0, "degree must equal (conductor-1)/2 for cyclotomic_real");
            break;
        case Family::CubicReal:
            if (record.degree_N != 3)
                fail(3, 0, "cubic_real degree must be 3");
            break;
        case Family::RealCyclicSmallConductor:
            if (!record.conductor || *record.conductor >= 100)
                fail(2, 0, "real_cyclic_small_conductor needs a conductor below 100");
            break;
        case Family::Quintic:
            if (record.degree_N != 5)
                fail(3, 0, "quintic degree must be 5");
            if (!record.conductor || !is_prime(*record.conductor) ||
                *record.conductor % 10 != 1)
                fail(2, 0, "quintic conductor must be a prime = 1 mod 10");
            break;
        case Family::Decimic:
            if (record.degree_N != 10)
                fail(3, 0, "decimic degree must be 10");
            if (!record.conductor)
                fail(2, 0, "decimic needs a conductor");
            break;
        case Family::Custom:
            break;
        }
        for (const auto& [p, r] : record.rank_annotations) {
            unsigned e = 0;
            Integer rest = record.class_total;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (r > e)
                fail(5, 0, "rank annotation for p=" + to_string(p) + " exceeds its exponent " +
                               std::to_string(e));
        }
    }

    std::string source_;
    std::size_t line_;
    std::vector<std::string> fields_;
    std::vector<std::size_t> offsets_;
};

} // namespace

std::vector<FieldRecord> parse_dataset(std::istream& input, const std::string& source_name)
{
    std::vector<FieldRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#')
            continue;
        RowParser row(source_name, line_no, line);
        records.push_back(row.parse());
    }
    return records;
}

std::vector<FieldRecord> parse_dataset(const std::string& text, const std::string& source_name)
{
    std::istringstream in(text);
    return parse_dataset(in, source_name);
}

std::string serialize_record(const FieldRecord& record)
{
    auto join_items = [](const std::vector<FactorExpression>& items) {
        std::string out;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i)
                out += '.';
            out += items[i].source_text;
        }
        return out;
    };

    std::string out = to_string(record.family);
    out += '\t';
    out += record.label;
    out += '\t';
    if (record.conductor)
        out += to_string(*record.conductor);
    out += '\t';
    out += join_items(record.degree_items);
    out += '\t';
    out += join_items(record.class_items);
    out += '\t';
    bool first = true;
    for (const auto& [p, r] : record.rank_annotations) {
        if (!first)
            out += ',';
        out += to_string(p) + ":" + std::to_string(r);
        first = false;
    }
    out += '\t';
    first = true;
    for (const auto& sub : record.subfields) {
        if (!first)
            out += ',';
        out += sub.label + "=" + sub.value.source_text;
        first = false;
    }
    out += '\t';
    out += record.notes;
    return out;
}

namespace {

const char* bundled_text_for(Family family)
{
    switch (family) {
    case Family::CyclotomicMinus: return detail::bundled_cyclotomic_minus;
    case Family::CyclotomicReal: return detail::bundled_cyclotomic_real;
    case Family::CubicReal: return detail::bundled_cubic_real;
    case Family::RealCyclicSmallConductor: return detail::bundled_real_cyclic_small_conductor;
    case Family::Quintic: return detail::bundled_quintic;
    case Family::Decimic: return detail::bundled_decimic;
    case Family::Custom: return nullptr;
    }
    return nullptr;
}

} // namespace

const std::string& bundled_dataset_text(Family family)
{
    static const std::map<Family, std::string> cache = [] {
        std::map<Family, std::string> m;
        for (Family f : all_families())
            m.emplace(f, bundled_text_for(f));
        return m;
    }();
    static const std::string empty;
    auto it = cache.find(family);
    return it == cache.end() ? empty : it->second;
}

const std::vector<FieldRecord>& bundled_records(Family family)
{
    static const std::map<Family, std::vector<FieldRecord>> cache = [] {
        std::map<Family, std::vector<FieldRecord>> m;
        for (Family f : all_families())
            m.emplace(f, parse_dataset(bundled_dataset_text(f), to_string(f) + ".tsv"));
        return m;
    }();
    static const std::vector<FieldRecord> empty;
    auto it = cache.find(family);
    return it == cache.end() ? empty : it->second;
}

std::vector<FieldRecord> all_bundled_records()
{
    std::vector<FieldRecord> out;
    for (Family family : all_families()) {
        const auto& records = bundled_records(family);
        out.insert(out.end(), records.begin(), records.end());
    }
    return out;
}

} // namespace classnum
