#pragma once

#include <filesystem>
#include <string>

#include "dpzoo/catalog.hpp"

namespace testing {

inline std::filesystem::path source_dir() { return DPZOO_SOURCE_DIR; }
inline std::filesystem::path data_dir() { return source_dir() / "data"; }

// Loaded once per test binary.
inline const dpzoo::Catalog& catalog() {
    static const dpzoo::Catalog c = dpzoo::load_catalog(data_dir());
    return c;
}

inline const dpzoo::TableEntry& entry(const std::string& id) {
    const dpzoo::TableEntry* e = catalog().find(id);
    if (!e) throw std::runtime_error("no entry " + id);
    return *e;
}

}  // namespace testing
