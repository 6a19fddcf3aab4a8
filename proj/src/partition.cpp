#include "hallforge/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace hallforge {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::UnderflowAtPart: return "UnderflowAtPart";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotLectureHall: return "NotLectureHall";
    case ErrorKind::NotOddParty: return "NotOddParty";
    case ErrorKind::EvenPart: return "EvenPart";
    case ErrorKind::PartTooLarge: return "PartTooLarge";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::CounterUnderflow: return "CounterUnderflow";
    case ErrorKind::WidthTooLarge: return "WidthTooLarge";
    case ErrorKind::GuardViolation: return "GuardViolation";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::WindowOverflow: return "WindowOverflow";
    case ErrorKind::DivergentFactor: return "DivergentFactor";
    case ErrorKind::TableMiss: return "TableMiss";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    }
    return "Error";
}

namespace {

std::string join(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(v[j]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] <= 0)
            throw Error(ErrorKind::NotAPartition, "non-positive part in (" + join(parts_) + ")");
        if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1])
            throw Error(ErrorKind::NotAPartition, "parts not weakly decreasing in (" + join(parts_) + ")");
        size_ = checked_add(size_, parts_[j]);
        ++multiplicities_[parts_[j]];
    }
}

Partition Partition::from_unsorted(std::vector<Int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::map<Int, Int>& multiplicities) {
    std::vector<Int> parts;
    for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it) {
        auto [part, count] = *it;
        if (count < 0)
            throw Error(ErrorKind::NotAPartition, "negative multiplicity for part " + std::to_string(part));
        if (count > 0 && part <= 0)
            throw Error(ErrorKind::NotAPartition, "non-positive part " + std::to_string(part));
        parts.insert(parts.end(), static_cast<std::size_t>(count), part);
    }
    return Partition(std::move(parts));
}

Int Partition::multiplicity(Int part) const noexcept {
    auto it = multiplicities_.find(part);
    return it == multiplicities_.end() ? 0 : it->second;
}

Int Partition::alt_size() const noexcept {
    Int s = 0;
    for (std::size_t j = 0; j < parts_.size(); ++j) s += (j % 2 == 0) ? parts_[j] : -parts_[j];
    return s;
}

Partition IncrementVector::to_partition() const {
    std::vector<Int> parts = entries;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Int size(const Partition& p) noexcept { return p.size(); }
Int alt_size(const Partition& p) noexcept { return p.alt_size(); }

Int alt_size(const IncrementVector& v) {
    Int s = 0;
    for (std::size_t j = 0; j < v.entries.size(); ++j)
        s = (j % 2 == 0) ? checked_add(s, v.entries[j]) : checked_sub(s, v.entries[j]);
    return s;
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::map<Int, Int> m = a.multiplicities();
    for (auto [part, count] : b.multiplicities()) m[part] = checked_add(m[part], count);
    return Partition::from_multiplicities(m);
}

Partition multiset_diff(const Partition& a, const Partition& b) {
    std::map<Int, Int> m = a.multiplicities();
    for (auto [part, count] : b.multiplicities()) {
        Int have = a.multiplicity(part);
        if (have < count) throw UnderflowAtPart(part);
        m[part] = have - count;
    }
    return Partition::from_multiplicities(m);
}

Partition with_copies(const Partition& a, Int part, Int count) {
    if (count == 0) return a;
    std::map<Int, Int> m = a.multiplicities();
    m[part] = checked_add(m[part], count);
    return Partition::from_multiplicities(m);
}

IncrementVector comp_add(const IncrementVector& a, const IncrementVector& b) {
    std::vector<Int> out(std::max(a.entries.size(), b.entries.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = checked_add(a.at(j), b.at(j));
    return out;
}

IncrementVector comp_sub(const IncrementVector& a, const IncrementVector& b) {
    std::vector<Int> out(std::max(a.entries.size(), b.entries.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = checked_sub(a.at(j), b.at(j));
    return out;
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    Int number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(start, "expected a number");
        Int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc()) throw SyntaxError(start, "number out of range");
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Partition parse_comma_list(std::string_view text) {
    Scanner s(text);
    std::vector<Int> parts;
    for (;;) {
        s.skip_spaces();
        std::size_t at = s.pos();
        Int v = s.number();
        if (v <= 0) throw Error(ErrorKind::NotAPartition, "part at position " + std::to_string(at) + " is not positive");
        parts.push_back(v);
        s.skip_spaces();
        if (s.done()) break;
        if (s.peek() != ',') throw SyntaxError(s.pos(), "expected ','");
        s.advance();
    }
    return Partition::from_unsorted(std::move(parts));
}

Partition parse_power_notation(std::string_view text) {
    Scanner s(text);
    std::map<Int, Int> m;
    s.skip_spaces();
    while (!s.done()) {
        std::size_t at = s.pos();
        Int part = s.number();
        Int count = 1;
        if (!s.done() && s.peek() == '^') {
            s.advance();
            count = s.number();
        }
        if (!s.done() && !std::isspace(static_cast<unsigned char>(s.peek())))
            throw SyntaxError(s.pos(), "unexpected character");
        if (part <= 0 && count > 0)
            throw Error(ErrorKind::NotAPartition, "part at position " + std::to_string(at) + " is not positive");
        m[part] = checked_add(m[part], count);
        s.skip_spaces();
    }
    return Partition::from_multiplicities(m);
}

}  // namespace

Partition parse_partition(std::string_view text) {
    if (text.find(',') != std::string_view::npos) return parse_comma_list(text);
    return parse_power_notation(text);
}

std::string format_partition(const Partition& p) { return join(p.parts()); }

std::string display(const Partition& p) { return "(" + join(p.parts()) + ")"; }

std::string display(const IncrementVector& v) { return "(" + join(v.entries) + ")"; }

std::string format_multiplicities(const Partition& p) {
    std::ostringstream out;
    bool first = true;
    for (auto [part, count] : p.multiplicities()) {
        if (!first) out << ' ';
        first = false;
        out << part;
        if (count > 1) out << '^' << count;
    }
    return out.str();
}

bool canonical_less(const Partition& a, const Partition& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
}

void sort_canonical(std::vector<Partition>& items) {
    std::sort(items.begin(), items.end(), canonical_less);
}

}  // namespace hallforge
