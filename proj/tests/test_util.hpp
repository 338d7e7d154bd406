#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <unistd.h>

#include <gtest/gtest.h>

#include "tsecon/linalg.hpp"

namespace tsecon::testing {

/// Writes `content` to a unique file under the system temp directory and
/// removes it on destruction.
class TempFile {
public:
    explicit TempFile(const std::string& content, const std::string& suffix = ".csv") {
        static int counter = 0;
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        std::string stem = info != nullptr ? std::string(info->test_suite_name()) + "_" + info->name() : "tsecon";
        for (auto& c : stem) {
            if (c == '/') c = '_';
        }
        path_ = std::filesystem::temp_directory_path() /
                (stem + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + suffix);
        std::ofstream(path_, std::ios::binary) << content;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> z(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = z(rng);
    }
    return m;
}

inline Vector random_vector(Eigen::Index n, std::mt19937_64& rng) { return random_matrix(n, 1, rng).col(0); }

}  // namespace tsecon::testing
