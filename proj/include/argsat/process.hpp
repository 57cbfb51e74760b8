// SPDX-License-Identifier: MIT
#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <sys/types.h>
#include <vector>

namespace argsat {

/// Named file in the system temp directory, removed on destruction.
class TempFile {
public:
    explicit TempFile(std::string_view stem = "argsat");
    ~TempFile();
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
    TempFile(TempFile&& other) noexcept;
    TempFile& operator=(TempFile&& other) noexcept;

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

struct ProcessResult {
    bool timed_out = false;
    bool exited = false; ///< normal exit; exit_code is meaningful
    int exit_code = -1;
    int signal = 0;
    double seconds = 0.0; ///< wall clock from spawn to reap
};

struct SpawnOptions {
    std::filesystem::path working_directory; ///< empty: inherit
    std::filesystem::path stdout_path;       ///< empty: /dev/null
    std::filesystem::path stderr_path;       ///< empty: /dev/null
};

/// A child process in its own process group. Destroying a running child
/// kills the whole group and reaps it.
class ChildProcess {
public:
    /// argv[0] is resolved through PATH. Throws std::system_error if fork fails.
    ChildProcess(const std::vector<std::string>& argv, const SpawnOptions& opts);
    ~ChildProcess();
    ChildProcess(const ChildProcess&) = delete;
    ChildProcess& operator=(const ChildProcess&) = delete;
    ChildProcess(ChildProcess&& other) noexcept;
    ChildProcess& operator=(ChildProcess&& other) noexcept;

    /// Non-blocking; true once the child has been reaped.
    bool poll();
    /// SIGKILL to the process group, then reap.
    void kill();
    /// Blocks until exit or until `timeout_seconds` (if positive) passes, in
    /// which case the child is killed and the result is flagged timed_out.
    ProcessResult wait(double timeout_seconds = 0.0);

    double elapsed_seconds() const;
    bool finished() const noexcept { return done_; }
    const ProcessResult& result() const noexcept { return result_; }

private:
    void record_status(int status);

    pid_t pid_ = -1;
    bool done_ = false;
    std::chrono::steady_clock::time_point start_;
    ProcessResult result_;
};

/// Convenience wrapper: spawn, wait, return the result.
ProcessResult run_process(const std::vector<std::string>& argv, const SpawnOptions& opts,
                          double timeout_seconds = 0.0);

} // namespace argsat
