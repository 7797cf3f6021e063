#pragma once

#include <filesystem>

inline std::filesystem::path data_path(const char* name) {
    return std::filesystem::path(TSGA_DATA_DIR) / name;
}
