import { ApiClient } from "./api";
import { PlaygroundStore } from "./state";
import { View } from "./render";

// page can be served from anywhere; ?api=http://host:port overrides the
// target, otherwise same-origin (file:// falls back to the default port)
function apiBase(): string {
  const param = new URLSearchParams(window.location.search).get("api");
  if (param) return param;
  if (window.location.protocol.startsWith("http")) return window.location.origin;
  return "http://127.0.0.1:8000";
}

const store = new PlaygroundStore(new ApiClient(apiBase()), {
  strictChecks: new URLSearchParams(window.location.search).has("dev"),
});

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");
new View(root, store);

void store.newGame();
