#ifndef GARSIDE_TESTS_REFERENCE_TABLES_HPP
#define GARSIDE_TESTS_REFERENCE_TABLES_HPP

// Reference centralizer tables, transcribed into the word grammar.

#include <string>
#include <vector>

namespace tables {

struct Row {
  std::string element;
  std::vector<std::string> generators;
};

// Positive braids of length 11 in B3, one per conjugacy class.
inline const std::vector<Row> kB3Length11 = {
    {"s1^11", {"s1", "s2 s1^2 s2"}},
    {"s1^10 s2", {"s1 s2 s1^2 s2 s1", "s1^2 s2^2 s1^2 s2 s1^-6"}},
    {"s1^9 s2^2", {"s1 s2 s1^2 s2 s1", "s1^6 s2^-1 s1^-2 s2^-3 s1^-1"}},
    {"s1^8 s2^3", {"s1 s2 s1^2 s2 s1", "s1^6 s2^-1 s1^-3 s2^-2 s1^-1"}},
    {"s1^2 s2^6 s1^2 s2", {"s1^2 s2 s1^-2", "s1^3 s2^2 s1^-1"}},
    {"s1^7 s2^4", {"s1 s2 s1^2 s2 s1", "s1^6 s2^-2 s1^-2 s2^-2 s1^-1"}},
    {"s1^6 s2^2 s1^2 s2", {"s1^4 s2 s1^-4", "s1 s2 s1^2 s2 s1"}},
    {"s1^6 s2^5", {"s1 s2 s1^2 s2 s1", "s1^6 s2 s1^-1 s2^-2 s1^-2 s2^-2 s1^-1"}},
    {"s1^5 s2^3 s1^2 s2", {"s1^3 s2^2 s1^-4", "s1 s2 s1^2 s2 s1"}},
    {"s1^5 s2^2 s1^3 s2", {"s1^2 s2^3 s1^-4", "s1 s2 s1^2 s2 s1"}},
    {"s1^5 s2^2 s1^2 s2^2", {"s1 s2 s1^2 s2 s1", "s1 s2^4 s1^-4"}},
    {"s1^4 s2^2 s1^4 s2", {"s1 s2 s1^2 s2 s1", "s1^2 s2^2 s1^2 s2^-1 s1^-4"}},
    {"s1^4 s2^2 s1^3 s2^2", {"s1 s2 s1^2 s2 s1", "s1 s2^3 s1^2 s2^-1 s1^-4"}},
    {"s1^4 s2^2 s1^2 s2^3", {"s1 s2 s1^2 s2 s1", "s1 s2^2 s1^3 s2^-1 s1^-4"}},
    {"s1^4 s2^3 s1^2 s2^2", {"s1 s2 s1^2 s2 s1", "s1 s2^4 s1 s2^-1 s1^-4"}},
    {"s1^3 s2^2 s1^3 s2^3", {"s1 s2 s1^2 s2 s1", "s1^3 s2^2 s1 s2^-1 s1^-3 s2^-2 s1^-1"}},
};

// Positive braids of length 6 in B4, one per conjugacy class.
inline const std::vector<Row> kB4Length6 = {
    {"s1^6", {"s1", "s3", "s2 s1^2 s2"}},
    {"s1^5 s2", {"s3 s2 s1^2 s2 s3", "s1^2 s2 s1^-3", "s1^5 s2"}},
    {"s1^5 s3", {"s1", "s3", "s2 s1 s3 s2^2 s1 s3 s2"}},
    {"s1^4 s2^2", {"s3 s2 s1^2 s2 s3", "s1 s2 s1^2 s2 s1", "s1^4 s2^2"}},
    {"s1^4 s2 s3", {"s1^2 s2 s1 s3 s2^-2 s1^-3", "s1^4 s2 s3", "s1 s2 s1^2 s2 s1 s3 s2 s1^-2"}},
    {"s1^3 s3 s1 s3", {"s1", "s3", "s2 s1 s3 s2^2 s1 s3 s2"}},
    {"s1^3 s2^3", {"s1 s2 s1^-2", "s3 s2 s1^2 s2 s3", "s1 s2 s1^2 s2 s1"}},
    {"s1^3 s2^2 s3", {"s1 s2 s1 s3 s1 s2 s3 s2 s1^-2", "s1^3 s2^2 s3"}},
    {"s1^3 s2 s3 s2", {"s1^2 s3 s2 s3^-1 s2^-2 s1^-1", "s1 s2 s1 s2 s1 s3 s2 s1^-1", "s1^3 s2 s3 s2"}},
    {"s1 s3 s1 s3 s1 s3", {"s1", "s2 s1 s3 s2", "s3"}},
    {"s1 s2 s1^2 s2 s1", {"s1", "s2", "s3 s2 s1^2 s2 s3"}},
    {"s1^2 s2 s1 s3 s2", {"s1 s2 s1^-1", "s1 s3", "s2 s3 s2^-1"}},
    {"s1^2 s2^3 s3", {"s1 s2 s1 s3 s1 s2 s3 s2 s1 s2^-1 s1^-2", "s1^2 s2^3 s3"}},
    {"s1^2 s2^2 s3^2", {"s1 s2 s1 s3 s2^2 s3 s2 s1 s2^-1 s1^-2", "s1^3 s2 s1 s3 s2 s1^-1", "s1^2 s2^2 s3^2"}},
    {"s1^2 s2 s3^2 s2", {"s3", "s1 s2 s1^-1", "s1^2 s2 s3^2 s2"}},
    {"s1 s2^4 s3", {"s1 s2^3 s3^-1 s1^-1 s2^-1 s1^-1", "s1^2 s2 s1 s3 s2"}},
};

}  // namespace tables

#endif  // GARSIDE_TESTS_REFERENCE_TABLES_HPP
