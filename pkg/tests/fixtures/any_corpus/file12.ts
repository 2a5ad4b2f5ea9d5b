import { Component } from '@angular/core';

@Component({ selector: 'app-x', template: `<p>{{ company }}</p>` })
export class XComponent {
  company = 'Many';
  data!: any;
}
