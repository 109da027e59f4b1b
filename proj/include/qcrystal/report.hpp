#pragma once

#include <string>
#include <vector>

namespace qcrystal {

// One verified instance: {check, instance, status, witness?}.
struct CheckRecord {
    std::string check;
    std::string instance;
    bool passed = true;
    std::string witness;
};

struct Report {
    std::vector<CheckRecord> records;

    bool passed() const noexcept {
        for (const auto& r : records)
            if (!r.passed)
                return false;
        return true;
    }
    std::size_t failures() const noexcept {
        std::size_t k = 0;
        for (const auto& r : records)
            k += r.passed ? 0 : 1;
        return k;
    }
    void add(std::string check, std::string instance, bool passed, std::string witness = {}) {
        records.push_back(CheckRecord{std::move(check), std::move(instance), passed, std::move(witness)});
    }
    void append(const Report& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }
};

} // namespace qcrystal
