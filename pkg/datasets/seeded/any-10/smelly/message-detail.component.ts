import { Component } from '@angular/core';
import { Message, Api } from './message.model';

@Component({
  selector: 'app-message-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class MessageDetailComponent {
  current: Message | null = null;
  constructor(private api: Api) {}

  cache = new Map<string, any>();

}
