import { describe, expect, it } from 'vitest';

import { escapeHtml, renderMarkdown } from '../src/markdown.js';

describe('escapeHtml', () => {
  it('escapes markup characters', () => {
    expect(escapeHtml('<b>&"')).toBe('&lt;b&gt;&amp;&quot;');
  });
});

describe('renderMarkdown', () => {
  it('renders the report structure', () => {
    const html = renderMarkdown([
      '# Problem', '', 'Some text.', '',
      '# Inventive Principles', '',
      '- **7. Nesting** — description', '',
      '## Solution 1: Nested channels (principle 7)', '', 'Body here.',
    ].join('\n'));
    expect(html).toContain('<h1>Problem</h1>');
    expect(html).toContain('<p>Some text.</p>');
    expect(html).toContain('<ul>');
    expect(html).toContain('<li><strong>7. Nesting</strong> — description</li>');
    expect(html).toContain('<h2>Solution 1: Nested channels (principle 7)</h2>');
  });

  it('escapes embedded html before rendering', () => {
    const html = renderMarkdown('# T\n\n<script>alert(1)</script>');
    expect(html).not.toContain('<script>');
    expect(html).toContain('&lt;script&gt;');
  });

  it('joins wrapped lines into one paragraph', () => {
    const html = renderMarkdown('line one\nline two\n\nnext para');
    expect(html).toContain('<p>line one line two</p>');
    expect(html).toContain('<p>next para</p>');
  });
});
