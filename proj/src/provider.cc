// Copyright 2026 The gatex Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Transport for external neutral-rewrite providers.
//
// Subprocess: the command runs under /bin/sh with one input sentence per line
// on stdin and must answer with exactly one line per input on stdout. The
// prompt template is exported as GATEX_PROMPT (text) and
// GATEX_PROMPT_TEMPLATE ("zero-shot" / "few-shot").
//
// HTTP: each sentence is POSTed as a text/plain body; the response body is
// the rewrite. The template name travels in the X-Gatex-Prompt-Template
// header.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>

#include "gatex/errors.h"
#include "gatex/neutralizer.h"
#include "httplib.h"

extern char** environ;

namespace gatex::provider {
namespace {

using Clock = std::chrono::steady_clock;

std::string_view template_name(PromptTemplate prompt) {
  return prompt == PromptTemplate::ZeroShot ? "zero-shot" : "few-shot";
}

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void check_single_lines(std::span<const std::string> inputs) {
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].find('\n') != std::string::npos) {
      throw ProviderProtocolError("input " + std::to_string(i) + " spans several lines");
    }
  }
}

class Pipe {
 public:
  Pipe() {
    if (::pipe2(fds_, O_CLOEXEC) != 0) {
      throw ProviderProtocolError(std::string("pipe: ") + std::strerror(errno));
    }
  }
  ~Pipe() {
    close_read();
    close_write();
  }
  Pipe(const Pipe&) = delete;
  Pipe& operator=(const Pipe&) = delete;

  int read_end() const { return fds_[0]; }
  int write_end() const { return fds_[1]; }
  void close_read() { close_fd(fds_[0]); }
  void close_write() { close_fd(fds_[1]); }

 private:
  static void close_fd(int& fd) {
    if (fd >= 0) {
      ::close(fd);
      fd = -1;
    }
  }
  int fds_[2] = {-1, -1};
};

std::vector<std::string> child_environment(const ProviderConfig& config) {
  std::vector<std::string> env;
  for (char** e = environ; e && *e; ++e) {
    std::string_view entry(*e);
    if (entry.starts_with("GATEX_PROMPT=") || entry.starts_with("GATEX_PROMPT_TEMPLATE=")) {
      continue;
    }
    env.emplace_back(entry);
  }
  env.push_back("GATEX_PROMPT=" + std::string(prompt_text(config.prompt_template)));
  env.push_back("GATEX_PROMPT_TEMPLATE=" + std::string(template_name(config.prompt_template)));
  return env;
}

std::vector<std::string> split_reply_lines(const std::string& buffer) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < buffer.size()) {
    std::size_t end = buffer.find('\n', start);
    if (end == std::string::npos) end = buffer.size();
    std::string line = buffer.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> run_child(std::span<const std::string> lines,
                                   const ProviderConfig& config) {
  ignore_sigpipe();
  std::string payload;
  for (const std::string& line : lines) {
    payload += line;
    payload += '\n';
  }

  const std::vector<std::string> env_storage = child_environment(config);
  std::vector<char*> envp;
  for (const std::string& entry : env_storage) envp.push_back(const_cast<char*>(entry.c_str()));
  envp.push_back(nullptr);
  const std::string command = config.endpoint_or_command;
  char* argv[] = {const_cast<char*>("sh"), const_cast<char*>("-c"),
                  const_cast<char*>(command.c_str()), nullptr};

  Pipe to_child;
  Pipe from_child;
  const pid_t pid = ::fork();
  if (pid < 0) throw ProviderProtocolError(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::dup2(to_child.read_end(), STDIN_FILENO);
    ::dup2(from_child.write_end(), STDOUT_FILENO);
    ::execve("/bin/sh", argv, envp.data());
    ::_exit(127);
  }
  to_child.close_read();
  from_child.close_write();
  ::fcntl(to_child.write_end(), F_SETFL, O_NONBLOCK);
  ::fcntl(from_child.read_end(), F_SETFL, O_NONBLOCK);

  auto kill_child = [&] {
    ::kill(pid, SIGKILL);
    ::waitpid(pid, nullptr, 0);
  };

  std::string output;
  std::size_t written = 0;
  if (payload.empty()) to_child.close_write();
  auto deadline = Clock::now() + config.timeout;
  bool eof = false;
  while (!eof) {
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {from_child.read_end(), POLLIN, 0};
    if (to_child.write_end() >= 0) fds[count++] = {to_child.write_end(), POLLOUT, 0};
    const auto remaining =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (remaining.count() <= 0) {
      kill_child();
      throw ProviderTimeout("provider command timed out after " +
                            std::to_string(config.timeout.count()) + " ms");
    }
    const int ready = ::poll(fds, count, static_cast<int>(remaining.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      kill_child();
      throw ProviderProtocolError(std::string("poll: ") + std::strerror(errno));
    }
    if (ready == 0) continue;
    if (count > 1 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n = ::write(to_child.write_end(), payload.data() + written,
                                payload.size() - written);
      if (n > 0) {
        written += static_cast<std::size_t>(n);
      } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
        written = payload.size();  // child stopped reading; collect what it wrote
      }
      if (written == payload.size()) to_child.close_write();
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char buffer[4096];
      const ssize_t n = ::read(from_child.read_end(), buffer, sizeof buffer);
      if (n > 0) {
        output.append(buffer, static_cast<std::size_t>(n));
        deadline = Clock::now() + config.timeout;
      } else if (n == 0) {
        eof = true;
      } else if (errno != EAGAIN && errno != EINTR) {
        kill_child();
        throw ProviderProtocolError(std::string("read: ") + std::strerror(errno));
      }
    }
  }

  int status = 0;
  ::waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw ProviderProtocolError("provider command exited with status " +
                                std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));
  }
  std::vector<std::string> replies = split_reply_lines(output);
  if (replies.size() != lines.size()) {
    throw ProviderProtocolError("provider returned " + std::to_string(replies.size()) +
                                " lines for " + std::to_string(lines.size()) + " inputs");
  }
  return replies;
}

// Runs job(i) for every i in [0, n) on up to `parallel` threads and rethrows
// the failure of the lowest index, if any.
template <typename Job>
void parallel_for(std::size_t n, int parallel, Job job) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(n, static_cast<std::size_t>(parallel));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

struct HttpEndpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

HttpEndpoint parse_endpoint(std::string_view url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string_view::npos) {
    throw ConfigError("HTTP endpoint must look like http://host:port/path");
  }
  const std::size_t slash = url.find('/', scheme + 3);
  if (slash == std::string_view::npos) return {std::string(url), "/"};
  return {std::string(url.substr(0, slash)), std::string(url.substr(slash))};
}

}  // namespace

std::vector<std::string> run_subprocess(std::span<const std::string> inputs,
                                        const ProviderConfig& config) {
  config.validate();
  check_single_lines(inputs);
  if (inputs.empty()) return {};
  // Contiguous shards, one child process each.
  const std::size_t shards =
      std::min<std::size_t>(inputs.size(), static_cast<std::size_t>(config.max_parallel));
  const std::size_t per_shard = (inputs.size() + shards - 1) / shards;
  std::vector<std::vector<std::string>> results(shards);
  parallel_for(shards, config.max_parallel, [&](std::size_t shard) {
    const std::size_t begin = shard * per_shard;
    const std::size_t end = std::min(inputs.size(), begin + per_shard);
    if (begin < end) results[shard] = run_child(inputs.subspan(begin, end - begin), config);
  });
  std::vector<std::string> replies;
  replies.reserve(inputs.size());
  for (auto& shard : results) {
    for (auto& reply : shard) replies.push_back(std::move(reply));
  }
  return replies;
}

std::vector<std::string> run_http(std::span<const std::string> inputs,
                                  const ProviderConfig& config) {
  config.validate();
  const HttpEndpoint endpoint = parse_endpoint(config.endpoint_or_command);
  const auto seconds = config.timeout.count() / 1000;
  const auto micros = (config.timeout.count() % 1000) * 1000;
  std::vector<std::string> replies(inputs.size());
  parallel_for(inputs.size(), config.max_parallel, [&](std::size_t i) {
    httplib::Client client(endpoint.origin);
    client.set_connection_timeout(seconds, micros);
    client.set_read_timeout(seconds, micros);
    client.set_write_timeout(seconds, micros);
    httplib::Headers headers = {
        {"X-Gatex-Prompt-Template", std::string(template_name(config.prompt_template))}};
    auto response = client.Post(endpoint.path, headers, inputs[i], "text/plain");
    if (!response) {
      const auto error = response.error();
      if (error == httplib::Error::Read || error == httplib::Error::ConnectionTimeout) {
        throw ProviderTimeout("HTTP provider timed out on input " + std::to_string(i) + ": " +
                              httplib::to_string(error));
      }
      throw ProviderProtocolError("HTTP provider failed on input " + std::to_string(i) + ": " +
                                  httplib::to_string(error));
    }
    if (response->status != 200) {
      throw ProviderProtocolError("HTTP provider answered status " +
                                  std::to_string(response->status) + " on input " +
                                  std::to_string(i));
    }
    replies[i] = response->body;
  });
  return replies;
}

}  // namespace gatex::provider
