#pragma once

#include "classnum/expression.hpp"
#include "classnum/integer.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace classnum {

enum class Family {
    CyclotomicMinus,
    CyclotomicReal,
    CubicReal,
    RealCyclicSmallConductor,
    Quintic,
    Decimic,
    Custom,
};

std::string to_string(Family family);
std::optional<Family> family_from_string(const std::string& name);
const std::vector<Family>& all_families();

/* A named subfield with a known class number (or stated divisor of it). */
struct SubfieldClassNumber {
    std::string label;          /* e.g. "Q(sqrt-59)" */
    FactorExpression value;
};

struct FieldRecord {
    Family family = Family::Custom;
    std::string label;
    std::optional<Integer> conductor;
    std::vector<FactorExpression> degree_items;
    Integer degree_N;
    Integer odd_part_N1;
    std::vector<FactorExpression> class_items;
    Integer class_total;
    std::map<Integer, unsigned> rank_annotations;   /* p -> r_p */
    std::vector<SubfieldClassNumber> subfields;
    std::string notes;
};

class DatasetError : public std::runtime_error {
public:
    DatasetError(const std::string& source, std::size_t line, std::size_t column,
                 const std::string& message);

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string source_;
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

/*
 * Tab-separated, UTF-8, '#' comment lines and blank lines ignored:
 *   family  label  conductor  degree_expr  class_expr  ranks  subfield  notes
 * ranks is a comma list of `p:r` pairs; subfield a comma list of
 * `label=expr` pairs; a `total=INT` token inside notes is checked against
 * the evaluated class product.  All structural invariants (odd part,
 * rank <= exponent, stated totals, family degree laws) are validated at
 * load time and reported as DatasetError with line and column.
 */
std::vector<FieldRecord> parse_dataset(std::istream& input, const std::string& source_name);
std::vector<FieldRecord> parse_dataset(const std::string& text, const std::string& source_name);

/* Inverse of parse_dataset for one record (no trailing newline). */
std::string serialize_record(const FieldRecord& record);

/* Bundled transcriptions of the published tables, keyed by family. */
const std::vector<FieldRecord>& bundled_records(Family family);
std::vector<FieldRecord> all_bundled_records();
const std::string& bundled_dataset_text(Family family);

} // namespace classnum
