// SPDX-License-Identifier: MIT
#include "argsat/process.hpp"

#include <algorithm>
#include <cerrno>
#include <csignal>
#include <fcntl.h>
#include <system_error>
#include <thread>
#include <sys/wait.h>
#include <unistd.h>

namespace argsat {

TempFile::TempFile(std::string_view stem) {
    auto pattern = (std::filesystem::temp_directory_path() / (std::string(stem) + "-XXXXXX")).string();
    const int fd = ::mkstemp(pattern.data());
    if (fd < 0) throw std::system_error(errno, std::generic_category(), "mkstemp");
    ::close(fd);
    path_ = pattern;
}

TempFile::~TempFile() {
    if (!path_.empty()) {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
}

TempFile::TempFile(TempFile&& other) noexcept : path_(std::move(other.path_)) {
    other.path_.clear();
}

TempFile& TempFile::operator=(TempFile&& other) noexcept {
    if (this != &other) {
        if (!path_.empty()) {
            std::error_code ec;
            std::filesystem::remove(path_, ec);
        }
        path_ = std::move(other.path_);
        other.path_.clear();
    }
    return *this;
}

namespace {

[[noreturn]] void exec_child(const std::vector<std::string>& argv, const SpawnOptions& opts) {
    ::setpgid(0, 0);
    auto redirect = [](const std::filesystem::path& p, int target, int flags) {
        const char* path = p.empty() ? "/dev/null" : p.c_str();
        const int fd = ::open(path, flags, 0644);
        if (fd < 0) ::_exit(127);
        ::dup2(fd, target);
        ::close(fd);
    };
    redirect({}, STDIN_FILENO, O_RDONLY);
    redirect(opts.stdout_path, STDOUT_FILENO, O_WRONLY | O_CREAT | O_TRUNC);
    redirect(opts.stderr_path, STDERR_FILENO, O_WRONLY | O_CREAT | O_TRUNC);
    if (!opts.working_directory.empty() && ::chdir(opts.working_directory.c_str()) != 0)
        ::_exit(127);

    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    ::execvp(args[0], args.data());
    ::_exit(127);
}

} // namespace

ChildProcess::ChildProcess(const std::vector<std::string>& argv, const SpawnOptions& opts) {
    if (argv.empty()) throw std::invalid_argument("empty command line");
    start_ = std::chrono::steady_clock::now();
    pid_ = ::fork();
    if (pid_ < 0) throw std::system_error(errno, std::generic_category(), "fork");
    if (pid_ == 0) exec_child(argv, opts);
    // Mirror the child's setpgid so a kill right after spawn reaches the group.
    ::setpgid(pid_, pid_);
}

ChildProcess::~ChildProcess() {
    if (pid_ > 0 && !done_) kill();
}

ChildProcess::ChildProcess(ChildProcess&& other) noexcept
    : pid_(other.pid_), done_(other.done_), start_(other.start_), result_(other.result_) {
    other.pid_ = -1;
    other.done_ = true;
}

ChildProcess& ChildProcess::operator=(ChildProcess&& other) noexcept {
    if (this != &other) {
        if (pid_ > 0 && !done_) kill();
        pid_ = other.pid_;
        done_ = other.done_;
        start_ = other.start_;
        result_ = other.result_;
        other.pid_ = -1;
        other.done_ = true;
    }
    return *this;
}

double ChildProcess::elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

void ChildProcess::record_status(int status) {
    done_ = true;
    result_.seconds = elapsed_seconds();
    if (WIFEXITED(status)) {
        result_.exited = true;
        result_.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result_.signal = WTERMSIG(status);
    }
}

bool ChildProcess::poll() {
    if (done_) return true;
    int status = 0;
    const pid_t r = ::waitpid(pid_, &status, WNOHANG);
    if (r == pid_) {
        record_status(status);
    } else if (r < 0 && errno != EINTR) {
        done_ = true;
    }
    return done_;
}

void ChildProcess::kill() {
    if (done_ || pid_ <= 0) return;
    ::kill(-pid_, SIGKILL);
    ::kill(pid_, SIGKILL);
    int status = 0;
    while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
    record_status(status);
}

ProcessResult ChildProcess::wait(double timeout_seconds) {
    auto nap = std::chrono::microseconds(50);
    while (!poll()) {
        if (timeout_seconds > 0 && elapsed_seconds() >= timeout_seconds) {
            kill();
            result_.timed_out = true;
            break;
        }
        std::this_thread::sleep_for(nap);
        nap = std::min(nap * 2, std::chrono::microseconds(2000));
    }
    return result_;
}

ProcessResult run_process(const std::vector<std::string>& argv, const SpawnOptions& opts,
                          double timeout_seconds) {
    ChildProcess child(argv, opts);
    return child.wait(timeout_seconds);
}

} // namespace argsat
