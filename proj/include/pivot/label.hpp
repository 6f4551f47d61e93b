#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "pivot/errors.hpp"

namespace pivot {

/// A row/column index: a nonempty token without whitespace, ordered by name.
class Label {
public:
    Label() = default;
    explicit Label(std::string name) : name_(std::move(name)) {
        if (name_.empty()) throw Error("empty label");
        for (char c : name_) {
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                throw Error("label '" + name_ + "' contains whitespace");
            }
        }
    }

    const std::string& name() const { return name_; }

    auto operator<=>(const Label& rhs) const { return name_ <=> rhs.name_; }
    bool operator==(const Label& rhs) const = default;

private:
    std::string name_;
};

/// An unordered finite set of labels. Stored sorted so iteration order is the
/// canonical (lexicographic) order, but no observable behavior depends on it.
class LabelSet {
public:
    LabelSet() = default;
    LabelSet(std::initializer_list<Label> labels) : LabelSet(std::vector<Label>(labels)) {}
    explicit LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) {
        std::sort(labels_.begin(), labels_.end());
        auto dup = std::adjacent_find(labels_.begin(), labels_.end());
        if (dup != labels_.end()) throw Error("duplicate label '" + dup->name() + "' in set");
    }

    /// Convenience: build from name strings.
    static LabelSet of(std::initializer_list<std::string> names) {
        std::vector<Label> ls;
        ls.reserve(names.size());
        for (const auto& n : names) ls.emplace_back(n);
        return LabelSet(std::move(ls));
    }

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    bool contains(const Label& l) const {
        return std::binary_search(labels_.begin(), labels_.end(), l);
    }

    /// Position of l in canonical order. Throws LabelNotFound.
    std::size_t index_of(const Label& l) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || *it != l) throw LabelNotFound("label '" + l.name() + "' not in index set");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    const Label& at(std::size_t i) const { return labels_.at(i); }

    bool subset_of(const LabelSet& other) const {
        return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(),
                             labels_.end());
    }

    LabelSet set_union(const LabelSet& rhs) const {
        std::vector<Label> out;
        std::set_union(labels_.begin(), labels_.end(), rhs.labels_.begin(), rhs.labels_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    LabelSet set_intersection(const LabelSet& rhs) const {
        std::vector<Label> out;
        std::set_intersection(labels_.begin(), labels_.end(), rhs.labels_.begin(),
                              rhs.labels_.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    LabelSet set_difference(const LabelSet& rhs) const {
        std::vector<Label> out;
        std::set_difference(labels_.begin(), labels_.end(), rhs.labels_.begin(), rhs.labels_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    LabelSet sym_difference(const LabelSet& rhs) const {
        std::vector<Label> out;
        std::set_symmetric_difference(labels_.begin(), labels_.end(), rhs.labels_.begin(),
                                      rhs.labels_.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

    bool operator==(const LabelSet& rhs) const = default;

    /// "{a, b, c}"
    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) s += ", ";
            s += labels_[i].name();
        }
        return s + "}";
    }

private:
    static LabelSet from_sorted(std::vector<Label> labels) {
        LabelSet s;
        s.labels_ = std::move(labels);
        return s;
    }

    std::vector<Label> labels_;
};

} // namespace pivot
