import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    globals: true,
    environment: "node",
    // the e2e suite spawns the Python service once per file
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
