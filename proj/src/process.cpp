#include "simplikit/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include "simplikit/error.hpp"

namespace simplikit {

ProcessResult run_command(const std::string& command, const std::filesystem::path& cwd, double timeout_seconds,
                          const std::map<std::string, std::string>& env, std::size_t output_limit) {
  int fds[2];
  if (pipe2(fds, O_CLOEXEC) != 0) throw ValidationError("io-failure", std::string("pipe: ") + std::strerror(errno));
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw ValidationError("io-failure", std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    const int devnull = open("/dev/null", O_RDONLY);
    if (devnull >= 0) dup2(devnull, STDIN_FILENO);
    if (chdir(cwd.c_str()) != 0) _exit(126);
    for (const auto& [k, v] : env) setenv(k.c_str(), v.c_str(), 1);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);
  close(fds[1]);

  ProcessResult result;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_seconds);
  char buf[4096];
  bool pipe_open = true;
  bool exited = false;
  int status = 0;
  auto drain = [&](int wait_ms) {
    pollfd p{fds[0], POLLIN, 0};
    const int r = poll(&p, 1, wait_ms);
    if (r <= 0) return false;
    const ssize_t n = read(fds[0], buf, sizeof buf);
    if (n <= 0) {
      pipe_open = false;
      return false;
    }
    result.output.append(buf, static_cast<std::size_t>(n));
    if (result.output.size() > 2 * output_limit) result.output.erase(0, result.output.size() - output_limit);
    return true;
  };
  while (!exited) {
    if (std::chrono::steady_clock::now() >= deadline) {
      result.timed_out = true;
      break;
    }
    if (pipe_open) {
      drain(20);
    } else {
      usleep(5000);
    }
    if (waitpid(pid, &status, WNOHANG) == pid) exited = true;
  }
  if (exited) {
    // whatever is already buffered; descendants may keep the pipe open
    while (pipe_open && drain(0)) {
    }
  }
  close(fds[0]);
  kill(-pid, SIGKILL);
  if (!exited) {
    while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
  } else if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  if (result.output.size() > output_limit) result.output.erase(0, result.output.size() - output_limit);
  return result;
}

}  // namespace simplikit
