import { Component, Input, input } from '@angular/core';

export interface MessageCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
  highlight: boolean;
  locale: string;
  theme: string;
  compact: boolean;
}

@Component({
  selector: 'app-message-card',
  template: `<div>{{ config.name }}</div>`
})
export class MessageCardComponent {
  @Input() config!: MessageCardConfig;
}
