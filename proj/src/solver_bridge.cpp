#include "sepdfa/solver_bridge.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>

#include "sepdfa/error.hpp"

extern char** environ;

namespace sepdfa {

namespace {

// `assigned[v]` records whether variable v occurred in a "v" line.
SolverVerdict parse_output(std::string_view text, std::vector<bool>& assigned) {
  SolverVerdict verdict;
  std::optional<Outcome> outcome;
  std::vector<int> literals;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 's') {
      std::string_view rest = line.substr(1);
      while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      if (rest == "SATISFIABLE")
        outcome = Outcome::Sat;
      else if (rest == "UNSATISFIABLE")
        outcome = Outcome::Unsat;
      else
        throw SolverError("unexpected status line '" + std::string(line) + "'");
    } else if (line[0] == 'v') {
      std::size_t pos = 1;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos == line.size()) break;
        int lit = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), lit);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
          throw SolverError("malformed literal in '" + std::string(line) + "'");
        pos = static_cast<std::size_t>(ptr - line.data());
        literals.push_back(lit);
      }
    }
  }
  if (!outcome) throw SolverError("solver output has no 's' line");
  verdict.outcome = *outcome;
  if (verdict.outcome == Outcome::Sat) {
    int max_var = 0;
    for (int lit : literals) max_var = std::max(max_var, std::abs(lit));
    verdict.model.assign(static_cast<std::size_t>(max_var) + 1, false);
    assigned.assign(static_cast<std::size_t>(max_var) + 1, false);
    for (int lit : literals) {
      if (lit == 0) continue;
      assigned[std::abs(lit)] = true;
      if (lit > 0) verdict.model[lit] = true;
    }
  }
  return verdict;
}

class TempFile {
 public:
  TempFile() {
    std::string pattern = (std::filesystem::temp_directory_path() / "sepdfa-XXXXXX.cnf").string();
    int fd = mkstemps(pattern.data(), 4);
    if (fd < 0) throw SolverError("cannot create temporary DIMACS file");
    close(fd);
    path_ = pattern;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct Pipe {
  int fd[2] = {-1, -1};
  Pipe() {
    if (pipe2(fd, O_CLOEXEC) != 0) throw SolverError(std::string("pipe: ") + std::strerror(errno));
  }
  ~Pipe() { close_both(); }
  void close_end(int i) {
    if (fd[i] >= 0) close(fd[i]);
    fd[i] = -1;
  }
  void close_both() {
    close_end(0);
    close_end(1);
  }
};

}  // namespace

SolverVerdict parse_solver_output(std::string_view text) {
  std::vector<bool> assigned;
  return parse_output(text, assigned);
}

SolverVerdict solve(const CnfFormula& f, const SolverOptions& options) {
  using Clock = std::chrono::steady_clock;
  if (options.command.empty()) throw SolverError("empty solver command");

  const std::string dimacs = emit_dimacs(f);
  std::optional<TempFile> file;
  std::vector<std::string> args = options.command;
  const bool via_file = dimacs.size() > options.pipe_limit_bytes;
  if (via_file) {
    file.emplace();
    std::ofstream(file->path(), std::ios::binary) << dimacs;
    args.push_back(file->path());
  }

  Pipe in, out;
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in.fd[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out.fd[1], STDOUT_FILENO);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);

  const auto started = Clock::now();
  pid_t pid = 0;
  int rc = posix_spawnp(&pid, argv[0], &actions, &attr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  if (rc != 0) throw SolverError("cannot run solver '" + args[0] + "': " + std::strerror(rc));

  in.close_end(0);
  out.close_end(1);
  if (via_file) in.close_end(1);

  // Feed stdin and drain stdout together so neither side blocks on a full pipe.
  std::string output;
  std::size_t written = 0;
  bool timed_out = false;
  char buffer[1 << 16];
  signal(SIGPIPE, SIG_IGN);
  while (out.fd[0] >= 0) {
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {out.fd[0], POLLIN, 0};
    if (in.fd[1] >= 0) fds[count++] = {in.fd[1], POLLOUT, 0};
    int wait_ms = -1;
    if (options.timeout.count() > 0) {
      auto left = options.timeout - (Clock::now() - started);
      if (left <= std::chrono::duration<double>::zero()) {
        timed_out = true;
        break;
      }
      wait_ms = static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(left).count()) + 1;
    }
    if (poll(fds, count, wait_ms) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (count > 1 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t n = write(in.fd[1], dimacs.data() + written, std::min<std::size_t>(dimacs.size() - written, 1 << 16));
      if (n > 0) written += static_cast<std::size_t>(n);
      if (n < 0 || written == dimacs.size()) in.close_end(1);
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      ssize_t n = read(out.fd[0], buffer, sizeof buffer);
      if (n > 0)
        output.append(buffer, static_cast<std::size_t>(n));
      else if (n == 0 || errno != EINTR)
        out.close_end(0);
    }
  }

  int status = 0;
  if (timed_out) {
    kill(-pid, SIGKILL);
    waitpid(pid, &status, 0);
    throw SolverTimeout("solver exceeded " + std::to_string(options.timeout.count()) + " s");
  }
  in.close_both();
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - started).count();

  if (!WIFEXITED(status)) throw SolverError("solver terminated abnormally");
  const int code = WEXITSTATUS(status);
  if (code == 127) throw SolverError("solver '" + args[0] + "' not found");
  if (code != 10 && code != 20) throw SolverError("solver exited with code " + std::to_string(code));

  std::vector<bool> assigned;
  SolverVerdict verdict = parse_output(output, assigned);
  verdict.wall_seconds = seconds;
  if ((code == 10) != (verdict.outcome == Outcome::Sat))
    throw SolverError("solver exit code " + std::to_string(code) + " contradicts its status line");
  if (verdict.outcome == Outcome::Sat) {
    for (int v = 1; v <= f.variable_count(); ++v)
      if (static_cast<std::size_t>(v) >= assigned.size() || !assigned[v])
        throw SolverError("solver model misses variable " + std::to_string(v));
    if (!f.satisfied_by(verdict.model)) throw SolverError("solver model violates the formula");
  }
  return verdict;
}

}  // namespace sepdfa
